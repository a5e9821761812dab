"""Exact dense linear algebra over a :class:`~fdimlab.fields.Field`.

Vectors are columns.  Every routine takes the field first and never mutates
its inputs.
"""

from __future__ import annotations

import numpy as np

from .fields import Field

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "pivot_columns",
    "column_basis",
    "solve",
    "inverse",
    "complement_indices",
    "intersect",
    "batched_rank_mod_p",
]


def rref(F: Field, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    A = np.array(M, dtype=F.dtype, copy=True)
    if A.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c] != 0)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        if piv != 1:
            A[r] = F.reduce(A[r] * F.inv(piv))
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = F.reduce(A[mask] - np.outer(col[mask], A[r]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: Field, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: Field, M: np.ndarray) -> np.ndarray:
    """Columns spanning ``{x : M x = 0}``, one per free variable."""
    rows, cols = M.shape
    if rows == 0:
        return F.eye(cols)
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = F.zeros((cols, len(free)))
    for k, f in enumerate(free):
        out[f, k] = F.one
        for i, p in enumerate(pivots):
            out[p, k] = F(-R[i, f])
    return out


def pivot_columns(F: Field, M: np.ndarray) -> list[int]:
    """Indices of the first maximal independent set of columns, left to right."""
    if M.shape[1] == 0 or M.shape[0] == 0:
        return []
    return rref(F, M)[1]


def column_basis(F: Field, M: np.ndarray) -> np.ndarray:
    """Independent columns of ``M`` spanning its column space."""
    return M[:, pivot_columns(F, M)]


def solve(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """One solution ``X`` of ``A X = B``; raises ``ValueError`` if none exists."""
    vec = B.ndim == 1
    if vec:
        B = B.reshape(-1, 1)
    rows, cols = A.shape
    aug = np.concatenate([np.asarray(A, dtype=F.dtype), np.asarray(B, dtype=F.dtype)], axis=1)
    R, pivots = rref(F, aug)
    if any(p >= cols for p in pivots):
        raise ValueError("inconsistent linear system")
    X = F.zeros((cols, B.shape[1]))
    for i, p in enumerate(pivots):
        X[p] = R[i, cols:]
    return X[:, 0] if vec else X


def inverse(F: Field, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = rref(F, np.concatenate([np.asarray(A, dtype=F.dtype), F.eye(n)], axis=1))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def complement_indices(F: Field, U: np.ndarray, n: int, order=None) -> list[int]:
    """Standard basis indices that extend the column span of ``U`` to all of k^n.

    ``order`` fixes the preference among standard vectors (earlier wins).
    """
    order = list(range(n)) if order is None else list(order)
    E = F.zeros((n, n))
    for j, i in enumerate(order):
        E[i, j] = F.one
    k = U.shape[1]
    piv = pivot_columns(F, np.concatenate([np.asarray(U, dtype=F.dtype), E], axis=1))
    return [order[c - k] for c in piv if c >= k]


def intersect(F: Field, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Basis of ``col(U) ∩ col(V)``."""
    if U.shape[1] == 0 or V.shape[1] == 0:
        return F.zeros((U.shape[0], 0))
    N = nullspace(F, np.concatenate([U, F.reduce(-V)], axis=1))
    if N.shape[1] == 0:
        return F.zeros((U.shape[0], 0))
    W = F.matmul(U, N[: U.shape[1]])
    return column_basis(F, W)


def _inverse_mod(x: np.ndarray, p: int) -> np.ndarray:
    """Elementwise inverse of nonzero residues mod ``p`` (Fermat)."""
    out = np.ones_like(x)
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def batched_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices ``(N, r, c)`` over GF(p), eliminated in lockstep."""
    A = np.array(mats, dtype=np.int64) % p
    N, r, c = A.shape
    rank = np.zeros(N, dtype=np.int64)
    rows = np.arange(r)
    for col in range(c):
        cand = (A[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        pr = np.argmax(cand[b], axis=1)
        rk = rank[b]
        top = A[b, pr].copy()
        A[b, pr] = A[b, rk]
        A[b, rk] = top * _inverse_mod(top[np.arange(b.size), col], p)[:, None] % p
        f = A[b, :, col].copy()
        f[rows[None, :] <= rk[:, None]] = 0
        A[b] = (A[b] - f[:, :, None] * A[b, rk][:, None, :]) % p
        rank[b] += 1
    return rank
