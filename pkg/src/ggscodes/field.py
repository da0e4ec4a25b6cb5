"""Arithmetic in F_{p^d}, d = 2ne, with a deterministic integer codec.

Elements are handled as integer codes ``v = sum(c_i * p**i)`` where
``(c_0, ..., c_{d-1})`` are coordinates in the power basis of a root of the
modulus.  Scalar methods take and return ints; the ``*_arr`` methods are the
numpy-vectorised counterparts used for matrix work.  :class:`FieldElement` is a
thin operator-overloading wrapper for interactive use.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

MAX_LOG2_SIZE = 24
TABLE_LOG2_SIZE = 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for k in range(2, math.isqrt(p) + 1):
        if p % k == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p as coefficient lists, lowest degree first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _ppowmod(a: list[int], k: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return result


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` (coefficients low to high)."""
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    if _psub(_ppowmod(x, p**d, f, p), x, p):
        return False
    for r in prime_factors(d):
        h = _psub(_ppowmod(x, p ** (d // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def canonical_modulus(p: int, d: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``d`` whose low coefficients encode smallest.

    Returns the full coefficient sequence ``(c_0, ..., c_{d-1}, 1)``.
    """
    for v in range(p**d):
        low = [(v // p**i) % p for i in range(d)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {d} over F_{p}")  # pragma: no cover


class FieldCtx:
    """The field F_{p^{2ne}}; immutable after construction.

    Build through :func:`make_field`, which caches contexts so that equal
    parameters share one object.
    """

    def __init__(self, p: int, e: int, n: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if e < 1:
            raise ValueError(f"e={e} must be positive")
        if n < 3 or n % 2 == 0:
            raise ValueError(f"n={n} must be odd and at least 3")
        degree = 2 * n * e
        if degree * math.log2(p) > MAX_LOG2_SIZE:
            raise ValueError(
                f"field of size {p}^{degree} exceeds the 2^{MAX_LOG2_SIZE} enumeration guard"
            )
        self.p, self.e, self.n = p, e, n
        self.q = p**e
        self.degree = degree
        self.size = p**degree
        self.modulus = canonical_modulus(p, degree)
        self._powers = np.array([p**i for i in range(degree)], dtype=np.int64)
        self._mod_low = np.array(self.modulus[:-1], dtype=np.int64)
        self.exp = self.log = None
        if degree * math.log2(p) <= TABLE_LOG2_SIZE:
            self._build_tables()

    # -- codec ---------------------------------------------------------------

    def encode(self, coeffs) -> int:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.degree or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"expected {self.degree} coefficients in [0, {self.p})")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def decode(self, v: int) -> tuple[int, ...]:
        v = self._check(v)
        return tuple((v // self.p**i) % self.p for i in range(self.degree))

    def _check(self, v) -> int:
        v = int(v)
        if not 0 <= v < self.size:
            raise ValueError(f"code {v} out of range [0, {self.size})")
        return v

    def digits_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._powers) % self.p

    def undigits_arr(self, dig: np.ndarray) -> np.ndarray:
        return (dig % self.p) @ self._powers

    # -- vectorised polynomial multiplication (table-free path) --------------

    def _polymul_arr(self, a, b) -> np.ndarray:
        p, d = self.p, self.degree
        da, db = self.digits_arr(a), self.digits_arr(b)
        da, db = np.broadcast_arrays(da, db)
        prod = np.zeros(da.shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            prod[..., i : i + d] += da[..., i : i + 1] * db
        prod %= p
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[..., top : top + 1]
            prod[..., top - d : top] -= c * self._mod_low
            prod[..., top] = 0
            prod %= p
        return self.undigits_arr(prod[..., :d])

    def _build_tables(self) -> None:
        order = self.size - 1
        gen = self._find_generator()
        exp = np.empty(2 * order, dtype=np.int64)
        exp[0] = 1
        filled = 1
        step = gen
        while filled < order:
            take = min(filled, order - filled)
            exp[filled : filled + take] = self._polymul_arr(exp[:take], step)
            filled += take
            step = int(self._polymul_arr(step, step))
        exp[order:] = exp[:order]
        log = np.full(self.size, -1, dtype=np.int64)
        log[exp[:order]] = np.arange(order)
        if (log[1:] < 0).any():  # pragma: no cover - generator check guarantees this
            raise RuntimeError("generator does not span the multiplicative group")
        self.exp, self.log, self.generator = exp, log, gen

    def _find_generator(self) -> int:
        order = self.size - 1
        cofactors = [order // r for r in prime_factors(order)]
        for g in range(2, self.size):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        return 1  # only reached for the 2-element field, which is never built

    def _slow_pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = int(self._polymul_arr(result, base))
            base = int(self._polymul_arr(base, base))
            k >>= 1
        return result

    @property
    def has_tables(self) -> bool:
        return self.exp is not None

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return int(a) ^ int(b)
        return int(self.add_arr(a, b))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return int(a)
        return int(self.neg_arr(a))

    def mul(self, a: int, b: int) -> int:
        a, b = int(a), int(b)
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.exp[self.log[a] + self.log[b]])
        return int(self._polymul_arr(a, b))

    def inv(self, a: int) -> int:
        if int(a) == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        a, k = int(a), int(k)
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        k %= self.size - 1
        if self.has_tables:
            return int(self.exp[self.log[a] * k % (self.size - 1)])
        return self._slow_pow(a, k)

    # -- vectorised arithmetic -----------------------------------------------

    def add_arr(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.undigits_arr(self.digits_arr(a) + self.digits_arr(b))

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self.undigits_arr(-self.digits_arr(a))

    def sub_arr(self, a, b) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if not self.has_tables:
            return self._polymul_arr(a, b)
        a, b = np.broadcast_arrays(a, b)
        out = self.exp[self.log[a] + self.log[b]]
        out[(a == 0) | (b == 0)] = 0
        return out

    def pow_arr(self, a, k) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        k = np.asarray(k, dtype=np.int64)
        a, k = np.broadcast_arrays(a, k)
        if ((a == 0) & (k < 0)).any():
            raise ZeroDivisionError("negative power of zero")
        if self.has_tables:
            out = self.exp[(self.log[a] * (k % (self.size - 1))) % (self.size - 1)]
        else:
            out = np.ones(a.shape, dtype=np.int64)
            base = a.copy()
            kk = k % (self.size - 1)
            while (kk > 0).any():
                odd = (kk & 1).astype(bool)
                out = np.where(odd, self._polymul_arr(out, base), out)
                base = self._polymul_arr(base, base)
                kk >>= 1
        out = np.where(a == 0, np.where(k == 0, 1, 0), out)
        return out

    def inv_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero")
        return self.pow_arr(a, -1)

    def sum_arr(self, a, axis=-1) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        dig = self.digits_arr(a).sum(axis=axis if axis >= 0 else axis - 1)
        return self.undigits_arr(dig)

    # -- subfields and enumeration ------------------------------------------

    def in_subfield(self, x: int, d: int) -> bool:
        if self.degree % d:
            raise ValueError(f"{d} does not divide the extension degree {self.degree}")
        return self.pow(x, self.p**d) == int(x)

    def in_subfield_arr(self, x, d: int) -> np.ndarray:
        if self.degree % d:
            raise ValueError(f"{d} does not divide the extension degree {self.degree}")
        x = np.asarray(x, dtype=np.int64)
        return self.pow_arr(x, self.p**d) == x

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def subfield_elements(self, d: int) -> np.ndarray:
        els = self.elements()
        return els[self.in_subfield_arr(els, d)]

    def element(self, v: int) -> FieldElement:
        return FieldElement(self, self._check(v))

    def metadata(self) -> dict:
        return {"p": self.p, "e": self.e, "n": self.n, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, e={self.e}, n={self.n}, size={self.size})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int, n: int) -> FieldCtx:
    return FieldCtx(p, e, n)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FieldCtx`, stored as its integer code."""

    ctx: FieldCtx
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.decode(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("elements of different fields")
            return other.value
        return self.ctx._check(other)

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __pow__(self, k: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.value))

    def __repr__(self) -> str:
        return f"FieldElement({self.value})"
