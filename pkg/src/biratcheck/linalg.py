"""Dense linear algebra over F_p (numpy int64) and over QQ (Fractions)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def rref(rows, p: int, limit: int | None = None):
    """Reduced row echelon form; returns (all rows, pivot columns).

    ``rows`` is a list of equal-length lists.  Over F_p the arithmetic is
    vectorised with numpy; ``p == 0`` selects exact rational arithmetic.
    Only the first ``limit`` columns are used as pivots; the pivot rows come
    first in the returned matrix.
    """
    if p:
        return _rref_mod(rows, p, limit)
    return _rref_qq(rows, limit)


def _rref_mod(rows, p, limit):
    A = np.array(rows, dtype=np.int64) % p if len(rows) else np.zeros((0, 0), dtype=np.int64)
    if A.size == 0:
        return [list(map(int, r)) for r in A], []
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n if limit is None else limit):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r]) % p) % p
        pivots.append(c)
        r += 1
    return [list(map(int, row)) for row in A], pivots


def _rref_qq(rows, limit):
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return [], []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n if limit is None else limit):
        if r == m:
            break
        k = next((i for i in range(r, m) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows, ncols: int, p: int) -> list:
    """Basis of {v : A v = 0} as a list of vectors of length ``ncols``."""
    if not rows:
        return [[int(i == j) if p else Fraction(int(i == j)) for j in range(ncols)]
                for i in range(ncols)]
    R, piv = rref(rows, p)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i][f]) % p if p else -R[i][f]
        basis.append(v if p else [Fraction(x) for x in v])
    return basis


def solve(rows, rhs, p: int):
    """One solution of ``A x = b`` or ``None`` when the system is inconsistent."""
    return solve_many(rows, [rhs], p)[0]


def solve_many(rows, rhs_columns, p: int):
    """Solve ``A x = b`` for several right-hand sides at once.

    Returns one solution (or ``None``) per right-hand side.
    """
    if not rhs_columns:
        return []
    n = len(rows[0]) if rows else 0
    k = len(rhs_columns)
    aug = [list(r) + [col[i] for col in rhs_columns] for i, r in enumerate(rows)]
    R, piv = rref(aug, p, limit=n)
    r = len(piv)
    out = []
    for j in range(k):
        if any(R[i][n + j] for i in range(r, len(R))):
            out.append(None)
            continue
        x = [0] * n if p else [Fraction(0)] * n
        for i, c in enumerate(piv):
            x[c] = R[i][n + j]
        out.append(x)
    return out
