"""Jacobian dual matrix, the birationality criterion and inverse extraction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .groebner import Ideal, is_regular_mod, krull_dimension, monomials_of_degree
from .minors import RankResult, det, rank_mod, signed_maximal_minors
from .ratmap import (
    DatumError,
    RationalDatum,
    compose,
    equivalent,
    minimalize,
    restrict,
    validate_datum,
)
from .rees import ReesPresentation, phi1, rees_ideal

BIRATIONAL = "birational"
NOT_BIRATIONAL = "not-birational"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True, eq=False)
class JacobianDual:
    """psi: ``dgi`` constant rows (a basis of the linear forms of the source
    ideal) followed by one gradient row per X-linear Rees generator."""

    psi: list
    dgi: int
    n: int
    rank: RankResult
    rees: ReesPresentation

    @property
    def edim(self) -> int:
        return self.n + 1 - self.dgi

    @property
    def jdrank(self):
        return self.rank.rank

    @property
    def jdrank_plus(self):
        return None if self.rank.rank is None else self.rank.rank - self.dgi

    @property
    def b(self) -> Ideal:
        return self.rees.b

    def max_row_degree(self) -> int:
        return max((e.total_degree() for row in self.psi for e in row if e), default=0)


def build_psi(J: ReesPresentation, source_ideal: Ideal) -> JacobianDual:
    yring = J.b.ring
    nx = len(J.xnames)
    rows = []
    for ell in source_ideal.degree_part(1):
        rows.append([yring.constant(ell.coefficient(tuple(int(i == k) for i in range(nx))))
                     for k in range(nx)])
    dgi = len(rows)
    red = J.b.reducer()
    for h in J.slice1:
        rows.append([red(q) for q in J.gradient(h)])
    return JacobianDual(rows, dgi, nx - 1, rank_mod(rows, J.b), J)


def jacobian_dual(f: RationalDatum, J: ReesPresentation | None = None) -> JacobianDual:
    return build_psi(J or rees_ideal(f), f.ideal)


@dataclass
class BirationalityReport:
    verdict: str
    n: int
    jdrank: int | None
    jdrank_plus: int | None
    dgi: int
    edim: int
    naive_rank: int
    source_dim: float
    image_dim: float
    rank: RankResult
    inverse: RationalDatum | None = None
    inverse_verified: bool | None = None
    diagnostics: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    components: list = field(default_factory=list)


def jdrank(f: RationalDatum, jd: JacobianDual | None = None) -> BirationalityReport:
    """Rank data and the verdict they imply (no inverse extraction)."""
    jd = jd or jacobian_dual(f)
    src_dim = krull_dimension(f.ideal).krull_dim
    img_dim = krull_dimension(jd.b).krull_dim
    r = jd.rank
    warnings = list(f.validity.warnings)
    diags = list(r.diagnostics)
    if r.rank is None:
        verdict = INDETERMINATE
        warnings.append(f"Jacobian dual rank undefined (naive rank {r.naive_rank})")
    else:
        verdict = BIRATIONAL if r.rank == f.n else NOT_BIRATIONAL
        diags.append(f"jdrank {r.rank} {'=' if r.rank == f.n else '!='} n = {f.n}")
        if not jd.dgi <= r.rank <= f.n:
            warnings.append("rank bound dgi <= jdrank <= n violated")
        if src_dim - img_dim > f.n - r.rank:
            warnings.append("dimension inequality dim R - dim S <= n - jdrank violated")
        if r.rank - jd.dgi == jd.edim - 1 and src_dim != img_dim:
            warnings.append("maximal jdrank but dim S != dim R")
    return BirationalityReport(
        verdict=verdict, n=f.n, jdrank=r.rank, jdrank_plus=jd.jdrank_plus, dgi=jd.dgi,
        edim=jd.edim, naive_rank=r.naive_rank, source_dim=src_dim, image_dim=img_dim,
        rank=r, diagnostics=diags, warnings=warnings,
    )


def decide_birational(f: RationalDatum, degree_cap: int | None = None,
                      jd: JacobianDual | None = None) -> BirationalityReport:
    jd = jd or jacobian_dual(f)
    rep = jdrank(f, jd)
    if rep.verdict == BIRATIONAL:
        inv, notes = extract_inverse(jd, f, degree_cap)
        rep.diagnostics += notes
        if inv is None:
            rep.diagnostics.append("extraction-failed: no inverse found within the degree cap")
        else:
            rep.inverse = inv
            rep.inverse_verified = True
    for P in f.primes:
        entry = {"prime": [str(g) for g in P.gens]}
        try:
            g = restrict(f, P)
            sub = jacobian_dual(g)
            entry.update(jdrank=sub.jdrank, dgi=sub.dgi, edim=sub.edim)
        except DatumError as exc:
            entry["error"] = str(exc)
        rep.components.append(entry)
    if f.primes:
        rep.diagnostics.append("per-component ranks are informational; the global rank decides")
    return rep


# -- inverse ---------------------------------------------------------------


def _row_subsets(jd: JacobianDual):
    n = jd.n
    cert = jd.rank.regular_certificate or {}
    seen = set()
    if cert.get("kind") == "minor" and len(cert["rows"]) == n:
        first = tuple(cert["rows"])
        seen.add(first)
        yield first
    for R in itertools.combinations(range(len(jd.psi)), n):
        if R not in seen:
            yield R


def _as_inverse(forms, jd: JacobianDual, f: RationalDatum):
    b = jd.b
    try:
        g = validate_datum(b, forms, target_names=f.ring.names)
    except DatumError:
        return None
    return minimalize(g)


def extract_inverse(jd: JacobianDual, f: RationalDatum, degree_cap: int | None = None):
    """Inverse datum over k[Y]/b from signed maximal minors of psi, falling back
    to a degree-by-degree null-space search.  Returns ``(datum or None, notes)``."""
    notes = []
    if jd.jdrank != jd.n:
        return None, ["extraction skipped: jdrank != n"]
    b = jd.b
    tried = 0
    for R in _row_subsets(jd):
        rows = [jd.psi[i] for i in R]
        red = b.reducer()
        minors = [red(d) for d in signed_maximal_minors(rows)]
        if not is_regular_mod(Ideal(b.ring, minors), b):
            continue
        tried += 1
        g = _as_inverse(minors, jd, f)
        if g is not None and verify_inverse(f, g, b):
            notes.append(f"inverse from signed minors of psi rows {list(R)}")
            return g, notes
    if tried:
        notes.append(f"{tried} minor candidates failed verification")
    cap = degree_cap if degree_cap is not None else 2 * max(1, jd.max_row_degree())
    for D in range(1, cap + 1):
        for forms in _null_vectors(jd, D):
            g = _as_inverse(forms, jd, f)
            if g is not None and verify_inverse(f, g, b):
                notes.append(f"inverse from null space of psi in degree {D}")
                return g, notes
    notes.append(f"null-space search exhausted degree cap {cap}")
    return None, notes


def _standard_monomials(b: Ideal, D: int) -> list:
    nv = b.ring.nvars
    leads = [g.leading_monomial() for g in b.groebner()] if not b.is_zero() else []
    out = []
    for e in monomials_of_degree(nv, D):
        if not any(all(a >= c for a, c in zip(e, l)) for l in leads):
            out.append(e)
    return out


def _null_vectors(jd: JacobianDual, D: int):
    """Homogeneous solutions of psi v = 0 over S with entries of degree D."""
    b = jd.b
    ring = b.ring
    p = ring.field.p
    red = b.reducer()
    monos = _standard_monomials(b, D)
    if not monos:
        return
    ncols = jd.n + 1
    unknowns = [(i, mu) for i in range(ncols) for mu in monos]
    columns = []
    for i, mu in unknowns:
        col = {}
        for r, row in enumerate(jd.psi):
            if row[i]:
                prod = red(row[i].mul_monomial(mu))
                for e, c in prod.items():
                    col[(r, e)] = c
        columns.append(col)
    keys = sorted({k for c in columns for k in c})
    mat = [[int(c.get(k, 0)) if p else c.get(k, 0) for c in columns] for k in keys]
    basis = linalg.nullspace(mat, len(unknowns), p)
    if not basis:
        return
    candidates = list(basis)
    if len(basis) > 1:
        candidates.append([sum(v[k] for v in basis) % p if p else sum(v[k] for v in basis)
                           for k in range(len(unknowns))])
    for v in candidates:
        forms = [dict() for _ in range(ncols)]
        for (i, mu), c in zip(unknowns, v):
            if c:
                forms[i][mu] = c
        yield [ring.from_dict(d) for d in forms]


def verify_inverse(f: RationalDatum, g: RationalDatum, b: Ideal | None = None) -> bool:
    """g(f) is equivalent to the identity datum of the source."""
    if tuple(g.ring.names) != tuple(f.target_names):
        raise DatumError("inverse candidate must live on the target ring of f")
    if len(g.forms) != f.n + 1:
        return False
    try:
        comp = compose(g, f, image_ideal=b)
    except DatumError:
        return False
    return equivalent(comp.forms, f.ring.gens(), f.ideal)


# -- sufficient tests ---------------------------------------------------------


@dataclass(frozen=True)
class SufficientTest:
    fires: bool
    detail: dict


def linear_rank_test(f: RationalDatum, image_dim: float | None = None) -> SufficientTest:
    """Image of dimension n and linear syzygy matrix of rank n (source P^n only)."""
    if not f.ideal.is_zero():
        return SufficientTest(False, {"status": "not-applicable"})
    if image_dim is None:
        from .ratmap import image

        image_dim = image(f).dimension.krull_dim
    ph = phi1(f)
    fires = image_dim == f.n + 1 and ph.rank == f.n
    return SufficientTest(fires, {"status": "evaluated", "phi1_rank": ph.rank,
                                  "phi1_columns": ph.ncols, "image_dim": image_dim})


def semilinear_height_test(f: RationalDatum, J: ReesPresentation | None = None) -> SufficientTest:
    """Codimension of the (1,*) slice over S[X] is at least n."""
    J = J or rees_ideal(f)
    ring = J.ring
    b_ext = list(J.slice0)
    d0 = krull_dimension(Ideal(ring, b_ext)).krull_dim
    d1 = krull_dimension(Ideal(ring, b_ext + list(J.linear) + list(J.slice1))).krull_dim
    codim = d0 - d1
    return SufficientTest(codim >= f.n, {"codim": codim, "dim_quotient": d1, "dim_ambient": d0})


# -- Koszul relations of maximal minors ------------------------------------------


@dataclass(frozen=True)
class KoszulResult:
    ok: bool
    status: str
    degree_bound: int
    failures: tuple = ()


def koszul_hilbert_check(rho, slack: int = 2) -> KoszulResult:
    """Each Koszul relation Δ_i e_j - Δ_j e_i of the signed maximal minors of
    an (n+1) x n matrix lies in its column span, certified by bounded-degree
    linear algebra over k."""
    rows = len(rho)
    n = rows - 1
    if n < 1 or any(len(r) != n for r in rho):
        raise ValueError("koszul_hilbert_check needs an (n+1) x n matrix, n >= 1")
    ring = next(e.ring for r in rho for e in r)
    p = ring.field.p
    cols_T = [[rho[r][j] for r in range(rows)] for j in range(n)]
    delta = []
    for i in range(rows):
        d = det([rho[r] for r in range(rows) if r != i])
        delta.append(d if i % 2 == 0 else -d)
    ddeg = max((d.total_degree() for d in delta if d), default=0)
    coldeg = min(max((e.total_degree() for e in c if e), default=0) for c in cols_T)
    bound = max(0, ddeg - coldeg + slack)
    monos = [e for D in range(bound + 1) for e in monomials_of_degree(ring.nvars, D)]
    unknowns = [(l, mu) for l in range(n) for mu in monos]
    columns = []
    for l, mu in unknowns:
        col = {}
        for r in range(rows):
            if rho[r][l]:
                for e, c in rho[r][l].mul_monomial(mu).items():
                    col[(r, e)] = c
        columns.append(col)
    rels = []
    for i, j in itertools.combinations(range(rows), 2):
        K = [ring.zero()] * rows
        K[j] = K[j] + delta[i]
        K[i] = K[i] - delta[j]
        rels.append(((i, j), K))
    keys = sorted({k for c in columns for k in c}
                  | {(r, e) for _, K in rels for r in range(rows) for e, _ in K[r].items()})
    mat = [[c.get(k, 0) for c in columns] for k in keys]
    rhs = [[K[r].coefficient(e) for (r, e) in keys] for _, K in rels]
    sols = linalg.solve_many(mat, rhs, p)
    failures = tuple(ij for (ij, _), s in zip(rels, sols) if s is None)
    ok = not failures
    return KoszulResult(ok, "certified" if ok else "bound-exhausted", bound, failures)
