"""Rational places of the GGS curve x^q + x = y^{q+1}, y^{q^2} - y = z^m."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, make_field


@dataclass(frozen=True)
class Place:
    """A distinguished place: ``P`` (index mu), ``Q`` (bundle nu >= 1), ``inf`` or ``D``."""

    kind: str
    index: int = 0

    @classmethod
    def P(cls, mu: int) -> Place:
        return cls("P", mu)

    @classmethod
    def Q(cls, nu: int) -> Place:
        if nu < 1:
            raise ValueError("Q bundles are indexed from 1; Q_0 is P_0 + ... + P_{q-1}")
        return cls("Q", nu)

    @classmethod
    def D(cls, i: int) -> Place:
        return cls("D", i)

    def degree(self, q: int) -> int:
        return q if self.kind == "Q" else 1

    def __str__(self) -> str:
        return "Pinf" if self.kind == "inf" else f"{self.kind}{self.index}"


PINF = Place("inf")


@dataclass(frozen=True, eq=False)
class CurveCtx:
    """GGS(q, n) over F_{q^{2n}} with its invariants and canonical place lists.

    ``alphas``/``betas`` are integer codes sorted ascending (so ``alphas[0] ==
    betas[0] == 0``).  ``D`` is an ``(N, 3)`` array of ``(alpha, beta, gamma)``
    codes sorted by ``(gamma, beta, alpha)``.  ``A`` and ``B`` are the twist
    constants of the dual divisor.
    """

    field: FieldCtx
    q: int
    n: int
    m: int
    g: int
    total_places: int
    N: int
    A: int
    B: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    bundles: tuple[tuple[tuple[int, int, int], ...], ...]
    D: np.ndarray
    affine_count: int

    @property
    def mq1(self) -> int:
        return self.m * (self.q + 1)

    @property
    def R(self) -> int:
        return self.N + 2 * self.g - 2

    @property
    def P_points(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((a, 0, 0) for a in self.alphas)

    def __repr__(self) -> str:
        return f"CurveCtx(q={self.q}, n={self.n}, m={self.m}, g={self.g}, N={self.N})"


def invariants(q: int, n: int) -> dict[str, int]:
    """Closed-form invariants of GGS(q, n)."""
    if (q**n + 1) % (q + 1):
        raise ValueError("q + 1 must divide q^n + 1 (n odd)")
    m = (q**n + 1) // (q + 1)
    return {
        "m": m,
        "g": (q - 1) * (q ** (n + 1) + q**n - q**2) // 2,
        "total_places": q ** (2 * n + 2) - q ** (n + 3) + q ** (n + 2) + 1,
        "N": q ** (n + 2) * (q**n - q + 1) - q**3,
        "A": m * (q**n - q) + (q**n + 1) * (q - 1) - 1,
        "A_short": (q**n + 1) * (q - 1) - 1,
        "B": m * q**2 * (q**n - q**3) + (q**n + 1) * (q**2 - 1) - 1,
    }


def _group(values: np.ndarray) -> dict[int, np.ndarray]:
    order = np.argsort(values, kind="stable")
    sv = values[order]
    cuts = np.flatnonzero(np.diff(sv)) + 1
    return {int(chunk_v[0]): idx for chunk_v, idx in zip(np.split(sv, cuts), np.split(order, cuts))}


def enumerate_affine(F: FieldCtx, q: int, m: int) -> np.ndarray:
    """All affine solutions as an ``(count, 3)`` array of codes, sorted by (gamma, beta, alpha)."""
    els = F.elements()
    beta_map = _group(F.sub_arr(F.pow_arr(els, q * q), els))
    alpha_map = _group(F.add_arr(F.pow_arr(els, q), els))
    gm = F.pow_arr(els, m)
    bq1 = F.pow_arr(els, q + 1)
    rows = []
    for gamma in els:
        betas = beta_map.get(int(gm[gamma]))
        if betas is None:
            continue
        for beta in np.sort(betas):
            alphas = alpha_map.get(int(bq1[beta]))
            if alphas is None:
                continue
            for alpha in np.sort(alphas):
                rows.append((int(alpha), int(beta), int(gamma)))
    return np.array(rows, dtype=np.int64).reshape(-1, 3)


def make_curve(field: FieldCtx) -> CurveCtx:
    F = field
    q, n = F.q, F.n
    inv = invariants(q, n)
    m = inv["m"]
    pts = enumerate_affine(F, q, m)
    on_zero = pts[:, 2] == 0
    fq2 = F.subfield_elements(2 * F.e)
    betas = tuple(int(b) for b in np.sort(fq2))
    alphas = tuple(int(a) for a in fq2 if F.add(F.pow(int(a), q), int(a)) == 0)
    zero_pts = pts[on_zero]
    bundles = []
    for beta in betas:
        fiber = zero_pts[zero_pts[:, 1] == beta]
        bundles.append(tuple(tuple(int(c) for c in row) for row in fiber[np.argsort(fiber[:, 0])]))
    return CurveCtx(
        field=F,
        q=q,
        n=n,
        m=m,
        g=inv["g"],
        total_places=inv["total_places"],
        N=inv["N"],
        A=inv["A"],
        B=inv["B"],
        alphas=alphas,
        betas=betas,
        bundles=tuple(bundles),
        D=pts[~on_zero],
        affine_count=len(pts),
    )


def curve_from_params(p: int, e: int, n: int) -> CurveCtx:
    return make_curve(make_field(p, e, n))


def check_curve(curve: CurveCtx) -> list[str]:
    """Return a list of violated invariants (empty when the context is consistent)."""
    F, q = curve.field, curve.q
    problems = []
    if curve.m * (q + 1) != q**curve.n + 1:
        problems.append("m(q+1) != q^n + 1")
    if curve.affine_count + 1 != curve.total_places:
        problems.append(f"enumerated {curve.affine_count + 1} places, expected {curve.total_places}")
    if len(curve.D) != curve.N:
        problems.append(f"|D| = {len(curve.D)}, expected {curve.N}")
    if len(curve.alphas) != q or curve.alphas[0] != 0:
        problems.append("alphas malformed")
    if len(curve.betas) != q * q or curve.betas[0] != 0:
        problems.append("betas malformed")
    if any(len(b) != q for b in curve.bundles):
        problems.append("some Q bundle does not have q points")
    a, b, c = curve.D.T
    lhs1 = F.add_arr(F.pow_arr(a, q), a)
    rhs1 = F.pow_arr(b, q + 1)
    lhs2 = F.sub_arr(F.pow_arr(b, q * q), b)
    rhs2 = F.pow_arr(c, curve.m)
    if not ((lhs1 == rhs1) & (lhs2 == rhs2)).all():
        problems.append("a point of D violates the curve equations")
    if F.in_subfield_arr(b, 2 * F.e).any():
        problems.append("a point of D has beta in F_{q^2}")
    return problems


def principal_divisor(curve: CurveCtx, kind: str, index: int = 0) -> dict[Place, int]:
    """Divisor of ``x - alpha_index`` (kind "x"), ``y - beta_index`` ("y") or ``z`` ("z").

    Q_0 is expanded into its q places P_0, ..., P_{q-1}.
    """
    q, m = curve.q, curve.m
    if kind == "x":
        if not 0 <= index < q:
            raise ValueError(f"alpha index {index} out of range")
        return {Place.P(index): m * (q + 1), PINF: -m * (q + 1)}
    if kind == "y":
        if not 0 <= index < q * q:
            raise ValueError(f"beta index {index} out of range")
        if index == 0:
            out = {Place.P(mu): m for mu in range(q)}
        else:
            out = {Place.Q(index): m}
        out[PINF] = -m * q
        return out
    if kind == "z":
        out = {Place.P(mu): 1 for mu in range(q)}
        out.update({Place.Q(nu): 1 for nu in range(1, q * q)})
        out[PINF] = -(q**3)
        return out
    raise ValueError(f"unsupported function shape {kind!r}; expected 'x', 'y' or 'z'")


def divisor_degree(div: dict[Place, int], q: int) -> int:
    return sum(c * pl.degree(q) for pl, c in div.items())


def places_json(curve: CurveCtx) -> str:
    doc = {
        "field": curve.field.metadata(),
        "q": curve.q,
        "m": curve.m,
        "g": curve.g,
        "N": curve.N,
        "P": [list(pt) for pt in curve.bundles[0]],
        "Q": [[list(pt) for pt in bundle] for bundle in curve.bundles[1:]],
        "D": curve.D.tolist(),
    }
    return json.dumps(doc)
