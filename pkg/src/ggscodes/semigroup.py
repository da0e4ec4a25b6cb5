"""Weierstrass semigroups and pure gaps at P_0, ..., P_l (and optionally P_inf).

The criteria compare a sum of ceilings with a fraction whose denominator is
m(q+1); everything here works with the value scaled by m(q+1), so the sign
tests are exact integer comparisons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .curve import CurveCtx
from .rrspace import SupportedDivisor, ceil_div, ell

MAX_BOX = 10**7


@dataclass(frozen=True)
class WProfile:
    """Coefficients ``r = (r_0..r_l)`` at P_0..P_l and ``t`` at P_inf."""

    r: tuple[int, ...]
    t: int = 0
    include_infinity: bool = False

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(v) for v in self.r))
        if not self.r:
            raise ValueError("profile needs at least r_0")
        if not self.include_infinity and self.t != 0:
            raise ValueError("t must be 0 unless P_inf is included")

    @property
    def l(self) -> int:
        return len(self.r) - 1

    def coordinates(self) -> tuple[int, ...]:
        return self.r + ((self.t,) if self.include_infinity else ())

    @classmethod
    def from_tuple(cls, values: Sequence[int], include_infinity: bool) -> WProfile:
        values = tuple(values)
        if include_infinity:
            return cls(values[:-1], values[-1], True)
        return cls(values)

    def divisor(self, q: int) -> SupportedDivisor:
        return SupportedDivisor.make(q, self.r, (), self.t)


def _check_profile(curve: CurveCtx, prof: WProfile) -> None:
    if prof.l >= curve.q:
        raise ValueError(f"need l < q = {curve.q}, got l = {prof.l}")


def w_j_scaled(curve: CurveCtx, prof: WProfile, j: int) -> int:
    """m(q+1) * W_j as an integer."""
    _check_profile(curve, prof)
    if not 0 <= j <= prof.l:
        raise ValueError(f"j = {j} out of range 0..{prof.l}")
    q, m, m1 = curve.q, curve.m, curve.mq1
    r, l = prof.r, prof.l
    rj = r[j]
    total = sum(ceil_div(rj - ri, m1) for i, ri in enumerate(r) if i != j)
    total += (q - 1 - l) * ceil_div(rj, m1) + q * (q - 1) * ceil_div(rj, m)
    return m1 * total - (prof.t + q**3 * rj)


def w_inf_scaled(curve: CurveCtx, prof: WProfile) -> int:
    """m(q+1) * W_inf as an integer."""
    _check_profile(curve, prof)
    if not prof.include_infinity:
        raise ValueError("W_inf needs a profile that includes P_inf")
    q, m, m1 = curve.q, curve.m, curve.mq1
    r, l, t = prof.r, prof.l, prof.t
    ct = q ** (curve.n - 3) * t
    total = sum(ceil_div(ct - ri, m1) for ri in r[1:])
    total += (q - 1 - l) * ceil_div(ct, m1) + q * (q - 1) * ceil_div(ct, m)
    return m1 * total - m1 * t - (r[0] - ct)


def w_j_nonpositive(curve: CurveCtx, prof: WProfile, j: int) -> bool:
    return w_j_scaled(curve, prof, j) <= 0


def w_inf_nonpositive(curve: CurveCtx, prof: WProfile) -> bool:
    return w_inf_scaled(curve, prof) <= 0


def _w_values(curve: CurveCtx, prof: WProfile) -> list[int]:
    vals = [w_j_scaled(curve, prof, j) for j in range(prof.l + 1)]
    if prof.include_infinity:
        vals.append(w_inf_scaled(curve, prof))
    return vals


def in_weierstrass(curve: CurveCtx, prof: WProfile) -> bool:
    if any(c < 0 for c in prof.coordinates()):
        raise ValueError("semigroup membership needs nonnegative coordinates")
    return all(v <= 0 for v in _w_values(curve, prof))


def is_pure_gap(curve: CurveCtx, prof: WProfile) -> bool:
    if any(c <= 0 for c in prof.coordinates()):
        raise ValueError("pure gaps have strictly positive coordinates")
    return all(v > 0 for v in _w_values(curve, prof))


def _ell_drops(curve: CurveCtx, prof: WProfile) -> list[bool]:
    """For each place of the profile: does removing it once lower ell?"""
    q = curve.q
    G = prof.divisor(q)
    base = ell(curve, G)
    drops = []
    for j in range(prof.l + 1):
        r = list(G.r)
        r[j] -= 1
        drops.append(ell(curve, SupportedDivisor(tuple(r), G.s, G.t)) != base)
    if prof.include_infinity:
        drops.append(ell(curve, SupportedDivisor(G.r, G.s, G.t - 1)) != base)
    return drops


def oracle_membership(curve: CurveCtx, prof: WProfile) -> bool:
    """Semigroup membership from dimension differences alone."""
    _check_profile(curve, prof)
    if any(c < 0 for c in prof.coordinates()):
        raise ValueError("semigroup membership needs nonnegative coordinates")
    return all(_ell_drops(curve, prof))


def oracle_pure_gap(curve: CurveCtx, prof: WProfile) -> bool:
    """Pure-gap status from dimension differences alone."""
    _check_profile(curve, prof)
    if any(c <= 0 for c in prof.coordinates()):
        raise ValueError("pure gaps have strictly positive coordinates")
    return not any(_ell_drops(curve, prof))


def gaps_at_P0(curve: CurveCtx) -> list[int]:
    """Gaps at P_0, listed from the two families k = a + m(b + (q+1)c)."""
    q, m, m1 = curve.q, curve.m, curve.mq1
    gaps = set()
    for b in range(1, q):
        for c in range(q - b):
            gaps.add(m * (b + (q + 1) * c))
    for a in range(1, m):
        for b in range(q + 1):
            # floor(b/(q+1) - q^3 a/(m(q+1))) without floating point
            fl = (b * m - q**3 * a) // m1
            if b - fl > q * q - 1:
                continue
            for c in range(q * q - 1 - b + fl + 1):
                gaps.add(a + m * (b + (q + 1) * c))
    return sorted(gaps)


def gaps_by_ell_jumps(curve: CurveCtx, place: str = "P0") -> list[int]:
    """Gaps at P_0 or P_inf read off from ell(kP) = ell((k-1)P), 1 <= k <= 2g."""
    q = curve.q
    out = []
    for k in range(1, 2 * curve.g + 1):
        if place == "P0":
            G1, G0 = SupportedDivisor.make(q, [k]), SupportedDivisor.make(q, [k - 1])
        elif place == "Pinf":
            G1, G0 = SupportedDivisor.make(q, t=k), SupportedDivisor.make(q, t=k - 1)
        else:
            raise ValueError(f"unsupported place {place!r}")
        if ell(curve, G1) == ell(curve, G0):
            out.append(k)
    return out


def enumerate_pure_gaps(
    curve: CurveCtx, l: int, include_infinity: bool, box: Sequence[int]
) -> list[tuple[int, ...]]:
    """All pure gaps with 1 <= coordinate <= box bound, in lexicographic order."""
    if l >= curve.q:
        raise ValueError(f"need l < q = {curve.q}")
    width = l + 1 + int(include_infinity)
    if len(box) != width:
        raise ValueError(f"box needs {width} bounds")
    if any(b < 1 for b in box):
        raise ValueError("box bounds must be at least 1")
    size = 1
    for b in box:
        size *= b
    if size > MAX_BOX:
        raise ValueError(f"box has {size} tuples, limit is {MAX_BOX}")
    out = []
    for tup in itertools.product(*(range(1, b + 1) for b in box)):
        if is_pure_gap(curve, WProfile.from_tuple(tup, include_infinity)):
            out.append(tup)
    return out
