from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggscodes.curve import curve_from_params
from ggscodes.rrspace import curve_generators, telescopic_gaps
from ggscodes.semigroup import (
    MAX_BOX,
    WProfile,
    enumerate_pure_gaps,
    gaps_at_P0,
    gaps_by_ell_jumps,
    in_weierstrass,
    is_pure_gap,
    oracle_membership,
    oracle_pure_gap,
    w_inf_scaled,
    w_j_scaled,
)


@pytest.mark.parametrize("name", ["gk", "ggs25", "ggs33"])
def test_gaps_at_P0_match_ell_jumps(name, request):
    curve = request.getfixturevalue(name)
    gaps = gaps_at_P0(curve)
    assert gaps == gaps_by_ell_jumps(curve, "P0")
    assert len(gaps) == curve.g


@pytest.mark.parametrize("name", ["gk", "ggs25"])
def test_gaps_at_Pinf_match_generators(name, request):
    curve = request.getfixturevalue(name)
    assert gaps_by_ell_jumps(curve, "Pinf") == telescopic_gaps(curve_generators(curve))[0]


def test_single_point_criterion_matches_gap_list(gk):
    gaps = set(gaps_at_P0(gk))
    for k in range(1, 40):
        assert is_pure_gap(gk, WProfile((k,))) == (k in gaps)
        assert in_weierstrass(gk, WProfile((k,))) == (k not in gaps)


def test_frozen_pure_gaps_n5(ggs25):
    for j in (1, 2, 3):
        prof = WProfile((57, j), 3, include_infinity=True)
        assert is_pure_gap(ggs25, prof) and oracle_pure_gap(ggs25, prof)
    assert w_j_scaled(ggs25, WProfile((57, 1), 3, True), 0) > 0
    assert w_inf_scaled(ggs25, WProfile((57, 1), 3, True)) > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 120), st.integers(1, 20), st.integers(1, 20))
def test_w_criteria_match_oracle_n5(a, b, t):
    curve = curve_from_params(2, 1, 5)
    prof = WProfile((a, b), t, include_infinity=True)
    assert is_pure_gap(curve, prof) == oracle_pure_gap(curve, prof)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 120), st.integers(0, 20), st.integers(0, 20))
def test_membership_matches_oracle_n5(a, b, t):
    curve = curve_from_params(2, 1, 5)
    prof = WProfile((a, b), t, include_infinity=True)
    assert in_weierstrass(curve, prof) == oracle_membership(curve, prof)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 25), min_size=3, max_size=3), st.booleans(), st.integers(0, 25))
def test_membership_matches_oracle_q3(r, with_inf, t):
    curve = curve_from_params(3, 1, 3)
    prof = WProfile(tuple(r), t if with_inf else 0, include_infinity=with_inf)
    assert in_weierstrass(curve, prof) == oracle_membership(curve, prof)
    if min(prof.coordinates()) > 0:
        assert is_pure_gap(curve, prof) == oracle_pure_gap(curve, prof)


def test_enumerate_pure_gaps_matches_oracle(gk):
    found = enumerate_pure_gaps(gk, 1, True, (12, 6, 6))
    expected = [
        (a, b, t)
        for a in range(1, 13)
        for b in range(1, 7)
        for t in range(1, 7)
        if oracle_pure_gap(gk, WProfile((a, b), t, True))
    ]
    assert found == expected and found


def test_profile_validation(gk):
    with pytest.raises(ValueError):
        WProfile(())
    with pytest.raises(ValueError):
        WProfile((1, 2), 3)
    with pytest.raises(ValueError):
        is_pure_gap(gk, WProfile((1, 2, 3)))  # l = 2 needs q > 2
    with pytest.raises(ValueError):
        is_pure_gap(gk, WProfile((0, 2)))
    with pytest.raises(ValueError):
        in_weierstrass(gk, WProfile((-1, 2)))
    with pytest.raises(ValueError):
        w_inf_scaled(gk, WProfile((1, 2)))
    with pytest.raises(ValueError):
        w_j_scaled(gk, WProfile((1, 2)), 2)
    with pytest.raises(ValueError):
        gaps_by_ell_jumps(gk, "P1")


def test_enumerate_guards(gk):
    with pytest.raises(ValueError):
        enumerate_pure_gaps(gk, 1, True, (5, 5))
    with pytest.raises(ValueError):
        enumerate_pure_gaps(gk, 1, False, (0, 5))
    with pytest.raises(ValueError):
        enumerate_pure_gaps(gk, 1, True, (MAX_BOX, 2, 1))
    with pytest.raises(ValueError):
        enumerate_pure_gaps(gk, 2, False, (3, 3, 3))
    assert WProfile.from_tuple((1, 2, 3), True).coordinates() == (1, 2, 3)
