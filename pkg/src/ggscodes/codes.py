"""Evaluation codes C_L(D, G), their duals C_Omega(D, G), and checks on both.

The dual of C_L(D, G) is the coordinate-wise twist of C_L(D, G_perp) by
``1 / rho(P)``, with ``G_perp = sum (A - r_mu) P_mu + sum (A - s_nu) Q_nu + (B - t) P_inf``.
For n = 3, rho is identically 1.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .curve import CurveCtx
from .field import FieldCtx
from .floor import floor_code_bound, floor_divisor
from .linalg import independent_rows, matmul, rank, rref
from .prng import SplitMix64
from .rrspace import SupportedDivisor, basis_E, ell, evaluation_matrix
from .semigroup import WProfile, is_pure_gap


class BoundViolation(AssertionError):
    """A sampled codeword is lighter than the proven distance bound."""


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FieldCtx
    gen: np.ndarray
    divisor: SupportedDivisor
    kind: str
    d_lower: int = 1
    d_source: str = "none"
    d_upper: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def N(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def params(self) -> tuple[int, int, int]:
        return (self.N, self.k, self.d_lower)

    def metadata(self) -> dict:
        doc = {
            "field": self.field.metadata(),
            "kind": self.kind,
            "divisor": json.loads(self.divisor.to_json()),
            "N": self.N,
            "k": self.k,
            "d_lower": self.d_lower,
            "d_lower_source": self.d_source,
            "d_upper": self.d_upper,
        }
        doc.update(self.extra)
        return doc


@dataclass(frozen=True, eq=False)
class DualData:
    A: int
    B: int
    rho_vec: np.ndarray
    dual_divisor: SupportedDivisor


def _check_range(curve: CurveCtx, G: SupportedDivisor) -> None:
    if G.q != curve.q:
        raise ValueError(f"divisor is for q={G.q}, curve has q={curve.q}")
    if not 0 <= G.degree <= curve.R:
        raise ValueError(f"deg G = {G.degree} outside [0, N + 2g - 2 = {curve.R}]")


def perp_divisor(G: SupportedDivisor, A: int, B: int) -> SupportedDivisor:
    return SupportedDivisor(tuple(A - v for v in G.r), tuple(A - v for v in G.s), B - G.t)


def rho_exponents(curve: CurveCtx) -> list[int]:
    """Exponents e_i of z in rho = 1 + sum_i z^{e_i}, i = 1..(n-3)/2."""
    q, n = curve.q, curve.n
    return [
        (q**n + 1) * (q - 1) * sum(q ** (2 * j) for j in range(1, i + 1))
        for i in range(1, (n - 3) // 2 + 1)
    ]


def dual_data(curve: CurveCtx, G: SupportedDivisor, A: int | None = None, B: int | None = None) -> DualData:
    """Constants, rho on D and the dual divisor; ``A``/``B`` override the curve's values."""
    F = curve.field
    A = curve.A if A is None else A
    B = curve.B if B is None else B
    z = curve.D[:, 2]
    rho = np.ones(curve.N, dtype=np.int64)
    for ex in rho_exponents(curve):
        rho = F.add_arr(rho, F.pow_arr(z, ex))
    return DualData(A, B, rho, perp_divisor(G, A, B))


def dimension_formula(curve: CurveCtx, G: SupportedDivisor) -> int:
    """dim C_L(D, G) by lattice counting alone."""
    _check_range(curve, G)
    if G.degree < curve.N:
        return ell(curve, G)
    return curve.N - ell(curve, perp_divisor(G, curve.A, curve.B))


def _evaluation_code(curve: CurveCtx, G: SupportedDivisor, reduce: bool | None) -> np.ndarray:
    F = curve.field
    M = evaluation_matrix(curve, basis_E(curve, G))
    if reduce is None:
        reduce = G.degree >= curve.N
    if reduce and M.shape[0]:
        M = M[independent_rows(F, M)]
    return M


def build_CL(curve: CurveCtx, G: SupportedDivisor, reduce: bool | None = None) -> LinearCode:
    """C_L(D, G) with rows the evaluations of the Omega basis.

    When ``deg G >= N`` the evaluation map has a kernel and a maximal
    independent subset of rows (in basis order) is kept.  ``reduce=True``
    forces that check for any degree.
    """
    _check_range(curve, G)
    gen = _evaluation_code(curve, G, reduce)
    d = max(curve.N - G.degree, 1)
    return LinearCode(curve.field, gen, G, "C_L", d, "goppa")


@dataclass(frozen=True)
class PureGapBox:
    """Every tuple between ``lower`` and ``upper`` (inclusive) is assumed a pure gap."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]
    include_infinity: bool = True


def pure_gap_divisor(curve: CurveCtx, box: PureGapBox) -> SupportedDivisor:
    coeffs = [a + b - 1 for a, b in zip(box.lower, box.upper)]
    if box.include_infinity:
        return SupportedDivisor.make(curve.q, coeffs[:-1], (), coeffs[-1])
    return SupportedDivisor.make(curve.q, coeffs)


def pure_gap_bound(curve: CurveCtx, box: PureGapBox) -> int:
    """Distance bound for C_Omega(D, sum (a_i + b_i - 1) P_i) from a box of pure gaps.

    Every tuple in the box is checked; the bound is
    ``deg G - (2g - 2) + sum (b_i - a_i + 1)``.
    """
    if len(box.lower) != len(box.upper) or any(a > b for a, b in zip(box.lower, box.upper)):
        raise ValueError("malformed pure-gap box")
    for tup in itertools.product(*(range(a, b + 1) for a, b in zip(box.lower, box.upper))):
        if not is_pure_gap(curve, WProfile.from_tuple(tup, box.include_infinity)):
            raise ValueError(f"{tup} is not a pure gap")
    G = pure_gap_divisor(curve, box)
    return G.degree - (2 * curve.g - 2) + sum(b - a + 1 for a, b in zip(box.lower, box.upper))


def build_C_Omega(
    curve: CurveCtx,
    G: SupportedDivisor,
    H: SupportedDivisor | None = None,
    pure_gaps: PureGapBox | None = None,
    A: int | None = None,
    B: int | None = None,
    reduce: bool | None = None,
) -> LinearCode:
    """C_Omega(D, G) as the 1/rho twist of C_L(D, G_perp).

    With ``H`` such that ``G = H + floor(H)`` the floor bound is applied; with
    ``pure_gaps`` whose divisor is ``G`` the pure-gap bound is applied.  The
    reported ``d_lower`` is the best applicable bound.
    """
    _check_range(curve, G)
    F = curve.field
    dd = dual_data(curve, G, A, B)
    base = build_CL(curve, dd.dual_divisor, reduce=reduce)
    gen = F.mul_arr(base.gen, F.inv_arr(dd.rho_vec)[None, :])
    d, src = max(G.degree - (2 * curve.g - 2), 1), "goppa"
    if H is not None:
        if H + floor_divisor(curve, H) != G:
            raise ValueError(f"G = {G} is not H + floor(H) for H = {H}")
        fb = floor_code_bound(curve, H)
        if fb > d:
            d, src = fb, "floor"
    if pure_gaps is not None:
        if pure_gap_divisor(curve, pure_gaps) != G:
            raise ValueError("pure-gap box does not produce G")
        pb = pure_gap_bound(curve, pure_gaps)
        if pb > d:
            d, src = pb, "puregap"
    extra = {"A": dd.A, "B": dd.B, "dual_divisor": json.loads(dd.dual_divisor.to_json())}
    return LinearCode(F, gen, G, "C_Omega", d, src, extra=extra)


def verify_duality(c1: LinearCode, c2: LinearCode, sample_rows: int | None = None) -> bool:
    """Dimensions add to N and every row of ``c1`` is orthogonal to every row of ``c2``.

    ``sample_rows`` limits the check to that many evenly spaced rows of ``c2``
    (for codes too large to multiply out in full).
    """
    if c1.N != c2.N or c1.k + c2.k != c1.N:
        return False
    if c1.k == 0 or c2.k == 0:
        return True
    rows = c2.gen
    if sample_rows is not None and sample_rows < c2.k:
        rows = rows[np.linspace(0, c2.k - 1, sample_rows).astype(int)]
    return not matmul(c1.field, c1.gen, rows.T).any()


def systematic(code: LinearCode) -> tuple[np.ndarray, list[int]]:
    R, piv = rref(code.field, code.gen)
    return R, piv


def sample_weights(
    code: LinearCode, trials: int, seed: int, max_support: int = 6, batch: int = 8192
) -> int:
    """Minimum weight over ``trials`` random nonzero codewords.

    Each message has a random support of size 1..``max_support`` (positions
    drawn with replacement) and random nonzero values on it, applied to the
    reduced echelon generator.  Raises :class:`BoundViolation` if a codeword
    lighter than ``code.d_lower`` turns up.
    """
    if code.k == 0:
        raise ValueError("zero-dimensional code has no nonzero codewords")
    if trials < 1:
        raise ValueError("trials must be positive")
    F = code.field
    R, _ = systematic(code)
    k, N = R.shape
    smax = max(1, min(max_support, k))
    rng = SplitMix64(seed)
    best = N + 1
    done = 0
    while done < trials:
        b = min(batch, trials - done)
        size = 1 + rng.integers(b, smax)
        pos = rng.integers(b * smax, k).reshape(b, smax)
        val = 1 + rng.integers(b * smax, F.size - 1).reshape(b, smax)
        val[np.arange(smax)[None, :] >= size[:, None]] = 0
        word = np.zeros((b, N), dtype=np.int64)
        for col in range(smax):
            word = F.add_arr(word, F.mul_arr(val[:, col : col + 1], R[pos[:, col]]))
        wt = (word != 0).sum(axis=1)
        wt = wt[wt > 0]
        if wt.size:
            low = int(wt.min())
            if low < code.d_lower:
                raise BoundViolation(f"sampled weight {low} below proven bound {code.d_lower}")
            best = min(best, low)
        done += b
    return best if best <= N else 0


def write_matrix(path: str | Path, code: LinearCode) -> None:
    F = code.field
    with open(path, "w") as fh:
        fh.write(f"{code.N} {code.k} {F.p} {F.e} {F.n}\n")
        for row in code.gen:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def read_matrix(path: str | Path) -> tuple[tuple[int, int, int], np.ndarray]:
    """Returns ``((p, e, n), matrix)`` from the text format of :func:`write_matrix`."""
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) != 5:
            raise ValueError("header must be 'N k p e n'")
        N, k, p, e, n = (int(v) for v in head)
        rows = [list(map(int, line.split())) for line in fh if line.strip()]
    M = np.array(rows, dtype=np.int64).reshape(k, N)
    return (p, e, n), M


def check_code(code: LinearCode, full_rank: bool = True) -> list[str]:
    problems = []
    if code.k > code.N:
        problems.append("k > N")
    if code.k + code.d_lower > code.N + 1:
        problems.append("Singleton bound violated")
    if code.d_upper is not None and code.d_lower > code.d_upper:
        problems.append("d_lower > d_upper")
    if full_rank and rank(code.field, code.gen) != code.k:
        problems.append("generator is not full rank")
    return problems
