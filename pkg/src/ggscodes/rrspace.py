"""Explicit Riemann-Roch bases for divisors supported on P_mu, Q_nu and P_inf.

A basis function ``E_{i,j,k} = z^i prod (x - alpha_mu)^{j_mu} prod (y - beta_nu)^{k_nu}``
is identified with its exponent vector, a :class:`LatticePoint`.  For a divisor
``G`` the lattice set Omega(G) fixes ``j`` and ``k`` as ceilings of ``i``, so a
point is determined by ``i`` and the enumeration is one-dimensional.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .curve import CurveCtx, Place, PINF


def ceil_div(a: int, b: int) -> int:
    """Exact ceil(a / b) for b > 0 and any integer a."""
    return -((-a) // b)


@dataclass(frozen=True)
class SupportedDivisor:
    """``sum r_mu P_mu + sum s_nu Q_nu + t P_inf``; ``r`` has length q, ``s`` length q^2 - 1."""

    r: tuple[int, ...]
    s: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(v) for v in self.r))
        object.__setattr__(self, "s", tuple(int(v) for v in self.s))
        object.__setattr__(self, "t", int(self.t))
        q = len(self.r)
        if q < 2 or len(self.s) != q * q - 1:
            raise ValueError(f"need len(r) = q >= 2 and len(s) = q^2 - 1, got {len(self.r)}, {len(self.s)}")

    @property
    def q(self) -> int:
        return len(self.r)

    @property
    def degree(self) -> int:
        return sum(self.r) + self.q * sum(self.s) + self.t

    @classmethod
    def zero(cls, q: int) -> SupportedDivisor:
        return cls((0,) * q, (0,) * (q * q - 1), 0)

    @classmethod
    def make(cls, q: int, r: Sequence[int] = (), s: Sequence[int] = (), t: int = 0) -> SupportedDivisor:
        """Pad ``r`` and ``s`` with zeros up to their full lengths."""
        r, s = list(r), list(s)
        if len(r) > q or len(s) > q * q - 1:
            raise ValueError("too many coefficients for this q")
        return cls(tuple(r + [0] * (q - len(r))), tuple(s + [0] * (q * q - 1 - len(s))), t)

    def coefficients(self) -> tuple[int, ...]:
        return self.r + self.s + (self.t,)

    @classmethod
    def from_coefficients(cls, q: int, coeffs: Sequence[int]) -> SupportedDivisor:
        return cls(tuple(coeffs[:q]), tuple(coeffs[q:-1]), coeffs[-1])

    def __add__(self, other: SupportedDivisor) -> SupportedDivisor:
        return SupportedDivisor.from_coefficients(
            self.q, [a + b for a, b in zip(self.coefficients(), other.coefficients())]
        )

    def __sub__(self, other: SupportedDivisor) -> SupportedDivisor:
        return SupportedDivisor.from_coefficients(
            self.q, [a - b for a, b in zip(self.coefficients(), other.coefficients())]
        )

    def __le__(self, other: SupportedDivisor) -> bool:
        return all(a <= b for a, b in zip(self.coefficients(), other.coefficients()))

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coefficients())

    def with_coefficient(self, place: Place, value: int) -> SupportedDivisor:
        c = list(self.coefficients())
        c[self._slot(place)] = value
        return SupportedDivisor.from_coefficients(self.q, c)

    def coefficient(self, place: Place) -> int:
        return self.coefficients()[self._slot(place)]

    def _slot(self, place: Place) -> int:
        q = self.q
        if place.kind == "P" and 0 <= place.index < q:
            return place.index
        if place.kind == "Q" and 1 <= place.index < q * q:
            return q + place.index - 1
        if place.kind == "inf":
            return q * q + q - 1
        raise ValueError(f"{place} is not a distinguished place for q={q}")

    def to_json(self) -> str:
        return json.dumps({"r": list(self.r), "s": list(self.s), "t": self.t}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | dict) -> SupportedDivisor:
        doc = json.loads(text) if isinstance(text, str) else text
        if not isinstance(doc, dict) or set(doc) != {"r", "s", "t"}:
            raise ValueError('divisor JSON must be an object with keys "r", "s", "t"')
        return cls(tuple(doc["r"]), tuple(doc["s"]), doc["t"])

    def __str__(self) -> str:
        terms = [f"{c}P{i}" for i, c in enumerate(self.r) if c]
        terms += [f"{c}Q{i + 1}" for i, c in enumerate(self.s) if c]
        if self.t:
            terms.append(f"{self.t}Pinf")
        return " + ".join(terms) or "0"


class LatticePoint(NamedTuple):
    """Exponents ``(i, j_1..j_{q-1}, k_1..k_{q^2-1})`` of a basis function E."""

    i: int
    j: tuple[int, ...]
    k: tuple[int, ...]

    def weight(self, curve: CurveCtx) -> int:
        q, m = curve.q, curve.m
        return q**3 * self.i + m * (q + 1) * sum(self.j) + m * q * sum(self.k)

    def divisor(self, curve: CurveCtx) -> SupportedDivisor:
        """Valuations of E at P_mu, at each place of Q_nu and at P_inf."""
        m1 = curve.mq1
        return SupportedDivisor(
            (self.i,) + tuple(self.i + m1 * jm for jm in self.j),
            tuple(self.i + curve.m * kn for kn in self.k),
            -self.weight(curve),
        )

    def exponents(self) -> tuple[int, ...]:
        return (self.i,) + self.j + self.k

    def __mul__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(
            self.i + other.i,
            tuple(a + b for a, b in zip(self.j, other.j)),
            tuple(a + b for a, b in zip(self.k, other.k)),
        )


BasisFunction = LatticePoint


class ThetaPoint(NamedTuple):
    """Exponents ``(u, lambda, gamma)`` of the alternative basis Lambda."""

    u: int
    lam: tuple[int, ...]
    gam: tuple[int, ...]


def _check(curve: CurveCtx, G: SupportedDivisor) -> None:
    if G.q != curve.q:
        raise ValueError(f"divisor is for q={G.q}, curve has q={curve.q}")


def _omega_arrays(curve: CurveCtx, G: SupportedDivisor):
    q, m, m1 = curve.q, curve.m, curve.mq1
    r = np.array(G.r, dtype=np.int64)
    s = np.array(G.s, dtype=np.int64)
    hi = G.t + int(r[1:].sum()) + q * int(s.sum())
    lo = -G.r[0]
    if hi < lo:
        empty = np.zeros(0, dtype=np.int64)
        return empty, np.zeros((0, q - 1), np.int64), np.zeros((0, q * q - 1), np.int64)
    i = np.arange(lo, hi + 1, dtype=np.int64)
    J = -((i[:, None] + r[None, 1:]) // m1)
    K = -((i[:, None] + s[None, :]) // m)
    w = q**3 * i + m1 * J.sum(axis=1) + m * q * K.sum(axis=1)
    keep = w <= G.t
    return i[keep], J[keep], K[keep]


def omega_set(curve: CurveCtx, G: SupportedDivisor) -> list[LatticePoint]:
    """Members of Omega(G), ascending in ``i``."""
    _check(curve, G)
    i, J, K = _omega_arrays(curve, G)
    return [LatticePoint(int(a), tuple(map(int, b)), tuple(map(int, c))) for a, b, c in zip(i, J, K)]


@functools.lru_cache(maxsize=1 << 18)
def _ell_cached(curve: CurveCtx, r: tuple, s: tuple, t: int) -> int:
    q, m, m1 = curve.q, curve.m, curve.mq1
    lo = -r[0]
    hi = t + sum(r[1:]) + q * sum(s)
    if hi < lo:
        return 0
    if hi - lo < 48:
        count = 0
        q3, mq = q**3, m * q
        for i in range(lo, hi + 1):
            w = q3 * i
            for rv in r[1:]:
                w -= m1 * ((i + rv) // m1)
            for sv in s:
                w -= mq * ((i + sv) // m)
            if w <= t:
                count += 1
        return count
    i = np.arange(lo, hi + 1, dtype=np.int64)
    w = q**3 * i
    for rv in r[1:]:
        w = w - m1 * ((i + rv) // m1)
    for sv in s:
        w = w - m * q * ((i + sv) // m)
    return int((w <= t).sum())


def ell(curve: CurveCtx, G: SupportedDivisor) -> int:
    """Dimension of L(G), computed as the size of Omega(G)."""
    _check(curve, G)
    return _ell_cached(curve, G.r, G.s, G.t)


def riemann_roch_count(curve: CurveCtx, G: SupportedDivisor) -> int | None:
    """``1 - g + deg G`` when the cardinality law applies to ``G``, else ``None``."""
    w = min(G.r + G.s)
    if G.t >= 2 * curve.g - 1 - curve.q**3 * w:
        return 1 - curve.g + G.degree
    return None


def basis_E(curve: CurveCtx, G: SupportedDivisor) -> list[BasisFunction]:
    return omega_set(curve, G)


def theta_set(curve: CurveCtx, G: SupportedDivisor) -> list[ThetaPoint]:
    """Members of Theta(G), enumerated directly from its defining inequalities."""
    _check(curve, G)
    q, m, m1, n = curve.q, curve.m, curve.mq1, curve.n
    c = q ** (n - 3)
    lo = -G.t
    hi = G.r[0] + sum(G.r[1:]) + q * sum(G.s)
    out = []
    for u in range(lo, hi + 1):
        gam = tuple(ceil_div(-c * u - sv, m) for sv in G.s)
        sg = sum(gam)
        lam = tuple(ceil_div(m * sg - c * u - rv, m1) for rv in G.r[1:])
        if (m1 - c) * u + m1 * sum(lam) + m * sg <= G.r[0]:
            out.append(ThetaPoint(u, lam, gam))
    return out


def omega_to_theta(curve: CurveCtx, pt: LatticePoint) -> ThetaPoint:
    q, m, n = curve.q, curve.m, curve.n
    i, sj, sk = pt.i, sum(pt.j), sum(pt.k)
    u = -pt.weight(curve)
    lam = tuple(q * q * i + q ** (n - 1) * sj + m * sk + jm for jm in pt.j)
    gam = tuple((q + 1) * (i + q ** (n - 3) * sj) + q ** (n - 2) * sk + kn for kn in pt.k)
    return ThetaPoint(u, lam, gam)


def theta_to_omega(curve: CurveCtx, th: ThetaPoint) -> LatticePoint:
    q, m, m1, n = curve.q, curve.m, curve.mq1, curve.n
    u, sl, sg = th.u, sum(th.lam), sum(th.gam)
    i = -(m1 - q ** (n - 3)) * u - m1 * sl - m * sg
    j = tuple(u + sl + lm for lm in th.lam)
    k = tuple((q + 1) * (u + sl) + sg + gn for gn in th.gam)
    return LatticePoint(i, j, k)


# --- evaluation at D ---------------------------------------------------------

def _log_factors(curve: CurveCtx, idx=None) -> np.ndarray:
    """Rows: z, x - alpha_mu (mu >= 1), y - beta_nu (nu >= 1) at the chosen D points."""
    F = curve.field
    pts = curve.D if idx is None else curve.D[np.atleast_1d(idx)]
    a, b, c = pts.T
    rows = [c]
    rows += [F.sub_arr(a, al) for al in curve.alphas[1:]]
    rows += [F.sub_arr(b, be) for be in curve.betas[1:]]
    return np.stack(rows)


def evaluation_matrix(curve: CurveCtx, basis: Sequence[LatticePoint], idx=None) -> np.ndarray:
    """``len(basis) x N`` matrix of codes ``E(P)`` for P in D (or the subset ``idx``)."""
    F = curve.field
    factors = _log_factors(curve, idx)
    ncols = factors.shape[1]
    if not basis:
        return np.zeros((0, ncols), dtype=np.int64)
    X = np.array([pt.exponents() for pt in basis], dtype=np.int64)
    if F.has_tables:
        order = F.size - 1
        L = F.log[factors]
        return F.exp[(X % order) @ L % order]
    out = np.ones((len(basis), ncols), dtype=np.int64)
    for col, row in enumerate(factors):
        out = F.mul_arr(out, F.pow_arr(row[None, :], X[:, col : col + 1]))
    return out


def evaluate(curve: CurveCtx, f: LatticePoint, point: int | Place) -> int:
    """Code of ``E(P)`` for a D point given by index or ``Place.D(index)``."""
    if isinstance(point, Place):
        if point.kind != "D":
            raise ValueError(f"{point} is not a point of D")
        point = point.index
    if not 0 <= point < curve.N:
        raise ValueError(f"D index {point} out of range")
    F = curve.field
    a, b, c = (int(v) for v in curve.D[point])
    val = F.pow(c, f.i)
    for al, jm in zip(curve.alphas[1:], f.j):
        val = F.mul(val, F.pow(F.sub(a, al), jm))
    for be, kn in zip(curve.betas[1:], f.k):
        val = F.mul(val, F.pow(F.sub(b, be), kn))
    return val


# --- lattice and semigroup oracles ------------------------------------------

def psi_count(curve: CurveCtx, t: int) -> int:
    """Number of (a, b, c) with 0 <= a < m, 0 <= b <= q, c >= 0, q^3 a + mq b + m(q+1) c <= t."""
    q, m = curve.q, curve.m
    total = 0
    for a in range(m):
        for b in range(q + 1):
            rest = t - q**3 * a - m * q * b
            if rest >= 0:
                total += rest // (m * (q + 1)) + 1
    return total


def telescopic_gaps(generators: Sequence[int]) -> tuple[list[int], int]:
    """Gaps of the numerical semigroup generated by ``generators`` and the largest gap."""
    gens = sorted(int(a) for a in generators)
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive")
    if math.gcd(*gens) != 1:
        raise ValueError("generators must have gcd 1")
    smallest = gens[0]
    reach = [True]
    gaps: list[int] = []
    run, k = 1, 0
    while run < smallest:
        k += 1
        ok = any(k >= a and reach[k - a] for a in gens)
        reach.append(ok)
        if ok:
            run += 1
        else:
            gaps.append(k)
            run = 0
    return gaps, (gaps[-1] if gaps else -1)


def curve_generators(curve: CurveCtx) -> tuple[int, int, int]:
    """Pole orders of z, y, x at P_inf, which generate H(P_inf)."""
    q, m = curve.q, curve.m
    return (q**3, m * q, m * (q + 1))


def basis_lines(curve: CurveCtx, G: SupportedDivisor) -> list[str]:
    return [" ".join(str(v) for v in pt.exponents()) for pt in basis_E(curve, G)]


def valuation_map(curve: CurveCtx, pt: LatticePoint) -> dict[Place, int]:
    d = pt.divisor(curve)
    out = {Place.P(mu): v for mu, v in enumerate(d.r)}
    out.update({Place.Q(nu + 1): v for nu, v in enumerate(d.s)})
    out[PINF] = d.t
    return out
