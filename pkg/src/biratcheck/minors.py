"""Determinants, minors and the rank of a matrix over a reduced quotient ring.

A matrix is a list of rows of :class:`Polynomial` entries.  The rank of M
over k[vars]/b is r when every (r+1)-minor vanishes mod b and the r-minors
generate an ideal containing a regular element mod b; otherwise it is
undefined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groebner import Ideal, divide_exact, is_regular_mod
from .ring import Polynomial, PolyRing


def submatrix(M, rows, cols):
    return [[M[i][j] for j in cols] for i in rows]


def det(M) -> Polynomial:
    """Determinant by fraction-free elimination (exact division at each step)."""
    n = len(M)
    if n == 0:
        raise ValueError("det of an empty matrix needs a ring")
    if any(len(r) != n for r in M):
        raise ValueError("det needs a square matrix")
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    A = [list(r) for r in M]
    ring = A[0][0].ring
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return ring.zero()
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                v = akk * A[i][j] - aik * A[k][j]
                A[i][j] = divide_exact(v, prev) if k else v
            A[i][k] = ring.zero()
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def bareiss_rank(M):
    """Rank over the fraction field together with a nonzero maximal minor.

    Returns ``(r, rows, cols)`` where the minor on ``rows x cols`` (original
    indices, sorted) is nonzero.  Pivots prefer low degree, then few terms.
    """
    if not M or not M[0]:
        return 0, (), ()
    m, n = len(M), len(M[0])
    A = [list(r) for r in M]
    ring = A[0][0].ring
    ridx, cidx = list(range(m)), list(range(n))
    prev = ring.one()
    r = 0
    for k in range(min(m, n)):
        best = None
        for j in range(k, n):
            for i in range(k, m):
                a = A[i][j]
                if a:
                    key = (a.total_degree(), len(a), ridx[i], cidx[j])
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, i, j = best
        A[k], A[i] = A[i], A[k]
        ridx[k], ridx[i] = ridx[i], ridx[k]
        for row in A:
            row[k], row[j] = row[j], row[k]
        cidx[k], cidx[j] = cidx[j], cidx[k]
        akk = A[k][k]
        for i in range(k + 1, m):
            aik = A[i][k]
            for j in range(k + 1, n):
                v = akk * A[i][j] - aik * A[k][j]
                A[i][j] = divide_exact(v, prev) if k else v
            A[i][k] = ring.zero()
        prev = akk
        r += 1
    return r, tuple(sorted(ridx[:r])), tuple(sorted(cidx[:r]))


@dataclass
class RankResult:
    """Outcome of :func:`rank_mod`.  ``rank`` is ``None`` when undefined."""

    rank: int | None
    naive_rank: int
    vanish_certificate: str
    regular_certificate: dict | None
    diagnostics: list = field(default_factory=list)

    @property
    def defined(self) -> bool:
        return self.rank is not None

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "naive_rank": self.naive_rank,
            "vanish_certificate": self.vanish_certificate,
            "regular_certificate": self.regular_certificate,
            "diagnostics": list(self.diagnostics),
        }


def _minor_candidates(m, n, r, first):
    seen = set()
    if first is not None:
        seen.add(first)
        yield first
    for R in itertools.combinations(range(m), r):
        for C in itertools.combinations(range(n), r):
            if (R, C) not in seen:
                yield R, C


def rank_mod(M, ambient: Ideal) -> RankResult:
    """Rank of ``M`` over ``ring/ambient`` (ambient trusted radical).

    The search starts at the generic rank of the lifted matrix, an upper
    bound for the naive rank, and walks down.  At the top level every larger
    minor vanishes identically; below it, the larger minors were all
    enumerated at the previous level.  At each level the Bareiss pivot minor
    is tried first, then all minors in lexicographic order, stopping at the
    first one that is regular mod ``ambient``.  When none is, the ideal of
    all r-minors is tested instead.
    """
    if not M or not M[0]:
        return RankResult(0, 0, "empty matrix", {"kind": "unit"})
    red = ambient.reducer()
    A = [[red(e) for e in row] for row in M]
    m, n = len(A), len(A[0])
    upper, prow, pcol = bareiss_rank(A)
    for r in range(upper, 0, -1):
        if r == upper:
            vanish = f"generic rank of the lifted matrix is {r}"
        else:
            vanish = f"all {r + 1}-minors vanish mod the ambient ideal"
        nonzero = []
        first = (prow, pcol) if r == upper else None
        for R, C in _minor_candidates(m, n, r, first):
            d = red(det(submatrix(A, R, C)))
            if not d:
                continue
            if is_regular_mod(Ideal(ambient.ring, [d]), ambient):
                cert = {"kind": "minor", "rows": list(R), "cols": list(C), "minor": str(d)}
                return RankResult(r, r, vanish, cert)
            nonzero.append(d)
        if nonzero:
            if is_regular_mod(Ideal(ambient.ring, nonzero), ambient):
                return RankResult(r, r, vanish, {"kind": "ideal", "generators": len(nonzero)})
            diag = [f"the {r}-minors lie in a minimal prime of the ambient ideal"]
            return RankResult(None, r, vanish, None, diag)
    return RankResult(0, 0, "all entries vanish mod the ambient ideal", {"kind": "unit"})


def signed_maximal_minors(rows) -> list:
    """For an s x (s+1) matrix, Δ_i = (-1)^i det(delete column i)."""
    s = len(rows)
    out = []
    for i in range(s + 1):
        cols = [j for j in range(s + 1) if j != i]
        d = det(submatrix(rows, range(s), cols))
        out.append(d if i % 2 == 0 else -d)
    return out
