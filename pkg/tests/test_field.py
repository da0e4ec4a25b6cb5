from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggscodes.field import FieldCtx, canonical_modulus, is_irreducible, is_prime, make_field, prime_factors


def slow_mul(F: FieldCtx, a: int, b: int) -> int:
    """Schoolbook product of coefficient lists, reduced by the modulus."""
    p, d = F.p, F.degree
    x, y = F.decode(a), F.decode(b)
    prod = [0] * (2 * d - 1)
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            prod[i + j] = (prod[i + j] + u * v) % p
    mod = F.modulus
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * mod[i]) % p
    return F.encode(prod[:d])


def has_small_factor(f, p):
    """Trial division by every monic polynomial of degree <= deg(f) / 2."""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            g = list(low) + [1]
            r = list(f)
            for top in range(d, k - 1, -1):
                c = r[top]
                if c:
                    for i in range(k + 1):
                        r[top - k + i] = (r[top - k + i] - c * g[i]) % p
            if not any(r[:k]):
                return True
    return False


@pytest.mark.parametrize(
    "p,d,expected",
    [(2, 6, (1, 1, 0, 0, 0, 0, 1)), (2, 10, (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1)), (3, 6, (2, 1, 0, 0, 0, 0, 1))],
)
def test_canonical_modulus_frozen(p, d, expected):
    assert canonical_modulus(p, d) == expected
    assert not has_small_factor(list(expected), p)


def test_canonical_modulus_is_smallest():
    # every smaller candidate with nonzero constant term has a factor
    p, d = 3, 6
    target = canonical_modulus(p, d)
    tv = sum(c * p**i for i, c in enumerate(target[:-1]))
    for v in range(tv):
        low = [(v // p**i) % p for i in range(d)]
        if low[0]:
            assert has_small_factor(low + [1], p)


@pytest.mark.parametrize("p,d", [(2, 4), (2, 5), (3, 3), (5, 2)])
def test_rabin_agrees_with_trial_division(p, d):
    for low in itertools.product(range(p), repeat=d):
        f = list(low) + [1]
        assert is_irreducible(f, p) == (not has_small_factor(f, p))


def test_prime_helpers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(63) == [3, 7]
    assert prime_factors(1023) == [3, 11, 31]


F64 = make_field(2, 1, 3)
F729 = make_field(3, 1, 3)
F1024 = make_field(2, 1, 5)


@pytest.mark.parametrize("F", [F64, F729], ids=["F64", "F729"])
def test_table_multiplication_matches_schoolbook(F):
    rng = np.random.default_rng(0)
    for a, b in rng.integers(0, F.size, size=(300, 2)):
        assert F.mul(int(a), int(b)) == slow_mul(F, int(a), int(b))


def test_untabled_field_matches_schoolbook():
    F = FieldCtx(2, 2, 5)  # 2^20 elements, above the table threshold
    assert not F.has_tables
    rng = np.random.default_rng(1)
    pairs = rng.integers(0, F.size, size=(100, 2))
    got = F.mul_arr(pairs[:, 0], pairs[:, 1])
    for (a, b), c in zip(pairs, got):
        assert int(c) == slow_mul(F, int(a), int(b))
    x = int(pairs[0, 0]) or 1
    assert F.mul(x, F.inv(x)) == 1


def test_size_guard():
    with pytest.raises(ValueError, match="guard"):
        FieldCtx(3, 2, 5)
    with pytest.raises(ValueError):
        FieldCtx(4, 1, 3)
    with pytest.raises(ValueError):
        FieldCtx(2, 1, 4)


def test_codec_roundtrip_and_errors():
    F = F729
    for v in (0, 1, 2, 3, 728):
        assert F.encode(F.decode(v)) == v
    assert F.decode(5) == (2, 1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        F.decode(729)
    with pytest.raises(ValueError):
        F.encode([3, 0, 0, 0, 0, 0])


elements = st.integers(0, F729.size - 1)


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_field_axioms_odd_characteristic(a, b, c):
    F = F729
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b


@settings(max_examples=100, deadline=None)
@given(st.integers(0, F64.size - 1), st.integers(-200, 200))
def test_pow_matches_repeated_multiplication(a, k):
    F = F64
    if a == 0 and k < 0:
        with pytest.raises(ZeroDivisionError):
            F.pow(a, k)
        return
    base = a if k >= 0 else F.inv(a)
    acc = 1
    for _ in range(abs(k)):
        acc = F.mul(acc, base)
    assert F.pow(a, k) == acc


def test_array_ops_agree_with_scalar():
    for F in (F64, F729):
        rng = np.random.default_rng(2)
        a = rng.integers(0, F.size, 500)
        b = rng.integers(0, F.size, 500)
        assert F.add_arr(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
        assert F.sub_arr(a, b).tolist() == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
        assert F.mul_arr(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
        assert F.pow_arr(a, 7).tolist() == [F.pow(int(x), 7) for x in a]
        nz = a[a != 0]
        assert F.mul_arr(nz, F.inv_arr(nz)).tolist() == [1] * len(nz)
        M = np.stack([a[:10], b[:10]])
        assert F.sum_arr(M, axis=0).tolist() == F.add_arr(a[:10], b[:10]).tolist()


@pytest.mark.parametrize("F,d,count", [(F64, 1, 2), (F64, 2, 4), (F64, 3, 8), (F729, 2, 9), (F1024, 2, 4)])
def test_subfields(F, d, count):
    sub = F.subfield_elements(d)
    assert len(sub) == count
    # closed under multiplication and addition
    assert set(F.mul_arr(sub[:, None], sub[None, :]).ravel().tolist()) <= set(sub.tolist())
    assert set(F.add_arr(sub[:, None], sub[None, :]).ravel().tolist()) <= set(sub.tolist())
    with pytest.raises(ValueError):
        F.in_subfield(1, 4)


def test_multiplicative_group_is_cyclic():
    F = F64
    assert len({int(F.exp[i]) for i in range(63)}) == 63


def test_field_element_wrapper():
    F = F729
    x, y = F.element(5), F.element(17)
    assert int(x * y) == F.mul(5, 17)
    assert int(x + y) == F.add(5, 17)
    assert int(x - y) == F.sub(5, 17)
    assert (x / y) * y == x
    assert x**3 == F.pow(5, 3)
    assert x.inverse() * x == 1
    assert -x + x == 0
    assert x.coeffs == (2, 1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        F.element(729)
    with pytest.raises(ValueError):
        x + F64.element(1)


def test_make_field_is_cached_and_metadata():
    assert make_field(2, 1, 3) is F64
    assert F64.metadata() == {"p": 2, "e": 1, "n": 3, "modulus": [1, 1, 0, 0, 0, 0, 1]}
