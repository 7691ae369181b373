"""Bigraded presentation ideal of the Rees algebra and its low slices."""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal, groebner_basis, kernel_slice
from .minors import RankResult, rank_mod
from .ratmap import RationalDatum
from .ring import Bigrading, MonomialOrder, PolyRing, bidegree, standard_bigrading


@dataclass(frozen=True, eq=False)
class ReesPresentation:
    """Presentation ideal J of R[f t] inside k[X, Y].

    ``J_basis`` is the reduced Gröbner basis of J for the block order
    (X | Y); every element is bihomogeneous.  ``slice0`` generates the image
    ideal ``b`` and ``slice1`` holds the basis elements of bidegree (1, q),
    q >= 1.  ``linear`` holds the bidegree (1, 0) elements, i.e. the linear
    forms of the source ideal.
    """

    datum: RationalDatum
    ring: PolyRing
    grading: Bigrading
    J_basis: tuple
    slice0: tuple
    linear: tuple
    slice1: tuple
    b: Ideal

    @property
    def xnames(self) -> tuple:
        return self.datum.ring.names

    @property
    def ynames(self) -> tuple:
        return self.datum.target_names

    def bidegree(self, p) -> tuple:
        return bidegree(p, self.grading)

    def gradient(self, p) -> list:
        """Coefficients Q_i in k[Y] of an X-linear element sum Q_i X_i."""
        ytarget = self.b.ring
        nx = len(self.xnames)
        out = [dict() for _ in range(nx)]
        for e, c in p.items():
            i = next(k for k in range(nx) if e[k])
            out[i][e[nx:]] = c
        return [ytarget.from_dict(d) for d in out]

    def slice11(self) -> list:
        """k-basis of J_(1,1), from the linear syzygies of the forms."""
        Y = [self.ring.var(y) for y in self.ynames]
        out = []
        for syz in kernel_slice(list(self.datum.forms), self.datum.ideal):
            out.append(sum((self.ring.embed(L) * Y[j] for j, L in enumerate(syz) if L),
                           self.ring.zero()))
        return out


def rees_ideal(f: RationalDatum) -> ReesPresentation:
    """J = (a + (Y_j - t f_j)) ∩ k[X, Y] by block elimination of t."""
    src = f.ring
    xs, ys = src.names, f.target_names
    t = "t"
    nx, ny = len(xs), len(ys)
    big = PolyRing((t,) + xs + ys, src.field)
    tt = big.var(t)
    gens = [big.embed(g) for g in f.ideal.gens]
    gens += [big.var(y) - tt * big.embed(fj) for y, fj in zip(ys, f.forms)]
    order = MonomialOrder("block", blocks=(1, nx, ny))
    weights = [1] + [1] * nx + [f.degree + 1] * ny
    gb = groebner_basis(gens, order, big, weights)
    ring = PolyRing(xs + ys, src.field, MonomialOrder("block", blocks=(nx, ny)))
    grading = standard_bigrading(ring, xs, ys)
    J = []
    for g in gb:
        if any(e[0] for e, _ in g.items()):
            continue
        h = ring.from_dict({e[1:]: c for e, c in g.items()})
        if bidegree(h, grading) is None:
            raise AssertionError(f"Rees basis element {h} is not bihomogeneous")
        J.append(h)
    yring = PolyRing(ys, src.field)
    slice0, linear, slice1 = [], [], []
    for h in J:
        p, q = bidegree(h, grading)
        if p == 0:
            slice0.append(h)
        elif p == 1 and q == 0:
            linear.append(h)
        elif p == 1:
            slice1.append(h)
    b = Ideal(yring, [yring.embed(h) for h in slice0])
    return ReesPresentation(f, ring, grading, tuple(J), tuple(slice0), tuple(linear),
                            tuple(slice1), b)


def slice(J: ReesPresentation, x_degree: int) -> list:
    """Reduced-basis elements of X-degree ``x_degree`` (0 or 1).

    For degree 1 the elements of Y-degree 0 (linear forms of the source
    ideal) are included; they are the degenerate rows of psi.
    """
    if x_degree == 0:
        return list(J.slice0)
    if x_degree == 1:
        return list(J.linear) + list(J.slice1)
    raise ValueError(f"slice of X-degree {x_degree} is not supported")


@dataclass(frozen=True, eq=False)
class Phi1:
    """Linear part of the syzygy matrix: m+1 rows, one column per linear syzygy."""

    matrix: list
    rank_report: RankResult

    @property
    def rank(self):
        return self.rank_report.rank

    @property
    def ncols(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0


def phi1(f: RationalDatum) -> Phi1:
    red = f.ideal.reducer()
    cols = [[red(L) for L in syz] for syz in kernel_slice(list(f.forms), f.ideal)]
    cols = [c for c in cols if any(c)]
    m1 = len(f.forms)
    matrix = [[c[j] for c in cols] for j in range(m1)] if cols else [[] for _ in range(m1)]
    return Phi1(matrix, rank_mod(matrix, f.ideal))


@dataclass(frozen=True)
class SgdResult:
    """Semilinear generation degree; ``value`` is None when slice1 is empty."""

    value: int | None
    value_xy: int | None
    s_max: int | None

    def as_dict(self) -> dict:
        return {"sgd": self.value, "sgd_kxy": self.value_xy, "s_max": self.s_max}


def sgd(f: RationalDatum, J: ReesPresentation | None = None) -> SgdResult:
    """Least s such that the (1, <= s) part generates the (1, *) part.

    ``value`` compares ideals modulo b (over S[X]); ``value_xy`` compares in
    k[X, Y] itself, where X-multiples of the image relations count as part of
    the (1, *) slice.
    """
    J = J or rees_ideal(f)
    if not J.slice1:
        return SgdResult(None, None, None)
    ring = J.ring
    qdeg = {id(h): J.bidegree(h)[1] for h in J.slice1}
    s_max = max(qdeg.values())
    b_ext = [ring.embed(g) for g in J.slice0]
    xb = [ring.var(x) * g for x in J.xnames for g in b_ext]

    def first(base, targets):
        for s in range(1, s_max + 1):
            part = list(J.linear) + [h for h in J.slice1 if qdeg[id(h)] <= s]
            I = Ideal(ring, part + base(s))
            if all(I.contains(h) for h in targets):
                return s
        return s_max

    value = first(lambda s: b_ext, J.slice1)
    value_xy = first(lambda s: [g for g in xb if J.bidegree(g)[1] <= s], list(J.slice1) + xb)
    return SgdResult(value, value_xy, s_max)
