"""Row reduction over a :class:`~ggscodes.field.FieldCtx` on integer-code matrices."""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


def rref(F: FieldCtx, M, forward_only: bool = False) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken left to right; within a column the first remaining row
    (in the input order) with a nonzero entry is used.  Zero rows are dropped.
    ``forward_only`` skips back-substitution (cheaper when only rank is needed).
    """
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = F.inv(int(A[r, c]))
        A[r, c:] = F.mul_arr(A[r, c:], inv)
        targets = np.arange(r + 1, rows) if forward_only else np.r_[0:r, r + 1 : rows]
        if targets.size:
            factors = A[targets, c]
            hit = targets[factors != 0]
            if hit.size:
                upd = F.mul_arr(A[hit, c][:, None], A[r, c:][None, :])
                A[hit, c:] = F.sub_arr(A[hit, c:], upd)
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: FieldCtx, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M, forward_only=True)[1])


def independent_rows(F: FieldCtx, M) -> list[int]:
    """Indices of a maximal independent subset of rows, greedily in input order."""
    M = np.asarray(M, dtype=np.int64)
    if M.shape[0] == 0:
        return []
    _, pivots = rref(F, M.T, forward_only=True)
    return pivots


def nullspace(F: FieldCtx, M) -> np.ndarray:
    """Basis (as rows) of ``{v : M v = 0}``; shape ``(cols - rank, cols)``."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(F, M)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for row, fc in enumerate(free):
        out[row, fc] = 1
        out[row, pivots] = F.neg_arr(R[:, fc])
    return out


def matmul(F: FieldCtx, A, B) -> np.ndarray:
    """``A @ B`` over the field."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError("inner dimensions differ")
    Bt = B.T
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        out[i] = F.sum_arr(F.mul_arr(A[i][None, :], Bt), axis=1)
    return out


def same_row_space(F: FieldCtx, A, B) -> bool:
    ra, rb = rank(F, A), rank(F, B)
    return ra == rb == rank(F, np.vstack([A, B]))
