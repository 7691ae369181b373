import itertools
import math

import sympy
from hypothesis import given
from hypothesis import strategies as st

from biratcheck import linalg
from biratcheck.groebner import (
    Ideal,
    colon,
    eliminate,
    gcd_list,
    gcd_multivariate,
    groebner_basis,
    intersect,
    is_regular_mod,
    kernel_slice,
    krull_dimension,
    monomials_of_degree,
    normal_form,
    spolynomial,
)
from biratcheck.ring import GREVLEX, LEX, FieldSpec, PolyRing
from strategies import homogeneous, polys

R = PolyRing(("X0", "X1", "X2"))
Y = PolyRing(("Y0", "Y1", "Y2", "Y3"))


def I(ring, *gens):
    return Ideal(ring, [ring.parse(g) for g in gens])


def test_groebner_examples():
    assert groebner_basis([R.parse("X0*X1 - X2^2"), R.parse("X1")]) == [R.parse("X1"),
                                                                        R.parse("X2^2")]
    assert groebner_basis([], ring=R) == []
    assert groebner_basis([R.parse("X0"), R.parse("X0 + X1")]) == [R.parse("X1"), R.parse("X0")]


def test_normal_form_examples():
    basis = [R.parse("X1"), R.parse("X2^2")]
    assert normal_form(R.parse("X1*X2"), basis).is_zero()
    assert normal_form(R.parse("X0"), basis) == R.parse("X0")


def test_segre_graph_elimination():
    big = PolyRing(("t", "X0", "X1", "X2", "X3", "Y0", "Y1", "Y2", "Y3"))
    G = I(big, "Y0 - t*X0*X2", "Y1 - t*X0*X3", "Y2 - t*X1*X2", "Y3 - t*X1*X3")
    E = eliminate(G, ["t", "X0", "X1", "X2", "X3"])
    assert E.equals(I(E.ring, "Y0*Y3 - Y1*Y2"))
    rel = big.parse("Y0*Y3 - Y1*Y2")
    assert G.contains(rel)


def test_elimination_examples():
    S = PolyRing(("X0", "Y0", "Y1"))
    assert eliminate(I(S, "X0 - Y0"), ["X0"]).is_zero()
    assert eliminate(I(S, "X0", "Y0*X0 - Y1"), ["X0"]).equals(I(PolyRing(("Y0", "Y1")), "Y1"))


def test_colon_examples():
    A = I(R, "X0*X1")
    assert colon(A, I(R, "X0")).equals(I(R, "X1"))
    assert colon(A, I(R, "X0 + X1")).equals(A)
    assert colon(A, Ideal(R, [R.one()])).equals(A)
    assert colon(A, Ideal(R, [])).is_unit()


def test_is_regular_mod_examples():
    S = PolyRing(("Y0", "Y1"))
    b = I(S, "Y0*Y1")
    assert not is_regular_mod(I(S, "Y0"), b)
    assert is_regular_mod(I(S, "Y0 + Y1"), b)
    assert is_regular_mod(Ideal(S, [S.one()]), b)


def test_dimension_examples():
    assert (krull_dimension(I(Y, "Y0*Y3 - Y1*Y2")).krull_dim, krull_dimension(I(Y, "Y0*Y3 - Y1*Y2")).codim) == (3, 1)
    assert krull_dimension(Ideal(R, [])).krull_dim == 3
    assert krull_dimension(I(R, "X0", "X1")).krull_dim == 1
    unit = krull_dimension(I(R, "1"))
    assert unit.empty and unit.krull_dim == -math.inf and unit.codim == 3


def test_kernel_slice_examples():
    assert len(kernel_slice([R.parse(s) for s in ("X1*X2", "X0*X2", "X0*X1")])) == 2
    S = PolyRing(("X0", "X1"))
    assert kernel_slice([S.parse("X0^2"), S.parse("X1^2")]) == []
    assert len(kernel_slice(R.gens())) == 3


def test_gcd_examples():
    S = PolyRing(("Y0", "Y1", "Y2"))
    assert gcd_multivariate(S.parse("Y0^2*Y1"), S.parse("Y0*Y1^2")) == S.parse("Y0*Y1")
    assert gcd_multivariate(S.parse("Y0^2 - Y1^2"), S.parse("Y0 + Y1")) == S.parse("Y0 + Y1")
    assert gcd_list([S.parse(s) for s in ("Y0^2", "Y0*Y1", "Y0*Y2")]) == S.parse("Y0")
    assert gcd_multivariate(S.zero(), S.zero()).is_zero()


def test_intersection_of_coordinate_ideals():
    out = intersect(I(R, "X0"), I(R, "X1"))
    assert out.equals(I(R, "X0*X1"))


# -- properties -------------------------------------------------------------

P5 = PolyRing(("X0", "X1", "X2"), FieldSpec(5))
P7 = PolyRing(("a", "x", "y"), FieldSpec(7))


def small_ideals(ring, k=3, max_deg=2):
    return st.lists(polys(ring, max_deg=max_deg, max_terms=3), min_size=1, max_size=k)


@given(small_ideals(P5), st.sampled_from([GREVLEX, LEX]))
def test_buchberger_criterion(gens, order):
    gb = groebner_basis(gens, order, P5)
    for f, g in itertools.combinations(gb, 2):
        assert normal_form(spolynomial(f, g, order), gb, order).is_zero()
    for g in gens:
        assert normal_form(g, gb, order).is_zero()
    # reduced: no term of any element is divisible by another leading monomial
    leads = [g.leading_monomial(order) for g in gb]
    for g, lm in zip(gb, leads):
        assert g.leading_coefficient(order) == 1
        for e, _ in g.items():
            for other in leads:
                if other != lm:
                    assert not all(a >= b for a, b in zip(e, other))


@given(small_ideals(P5), st.sampled_from([GREVLEX, LEX]))
def test_matches_sympy_groebner(gens, order):
    gb = groebner_basis(gens, order, P5)
    syms = sympy.symbols("X0 X1 X2")
    exprs = [sympy.Poly({e: c for e, c in g.items()}, *syms, modulus=5).as_expr() for g in gens]
    exprs = [e for e in exprs if e != 0]
    name = "grevlex" if order == GREVLEX else "lex"
    if not exprs:
        assert gb == []
        return
    ref = sympy.groebner(exprs, *syms, order=name, modulus=5)
    mine = {str(sympy.Poly({e: c for e, c in g.items()}, *syms, modulus=5).monic().as_expr())
            for g in gb}
    theirs = {str(sympy.Poly(p, *syms, modulus=5).monic().as_expr()) for p in ref.exprs}
    assert mine == theirs


def _dim_slice_free_of(gens, ring, D, drop):
    """dim_k (I_D ∩ span of monomials avoiding ``drop``), I homogeneous: I_D is
    spanned by monomial multiples of the generators."""
    vecs = []
    for g in gens:
        dg = g.total_degree()
        if dg > D:
            continue
        for mu in monomials_of_degree(ring.nvars, D - dg):
            vecs.append(g.mul_monomial(mu))
    monos = list(monomials_of_degree(ring.nvars, D))
    if not vecs:
        return 0
    bad = [e for e in monos if e[drop]]
    good = [e for e in monos if not e[drop]]
    rows = [[v.coefficient(e) for e in bad + good] for v in vecs]
    total = linalg.rank(rows, ring.field.p)
    proj = linalg.rank([r[:len(bad)] for r in rows], ring.field.p) if bad else 0
    return total - proj


@given(st.lists(st.integers(1, 2).flatmap(lambda d: homogeneous(P7, d, max_terms=3)),
                min_size=1, max_size=3))
def test_elimination_agrees_with_brute_force(gens):
    E = eliminate(Ideal(P7, gens), ["a"])
    sub = E.ring
    lead = [g.leading_monomial(GREVLEX) for g in E.groebner(GREVLEX)]
    for D in range(0, 5):
        std = [e for e in monomials_of_degree(sub.nvars, D)
               if not any(all(x >= y for x, y in zip(e, l)) for l in lead)]
        expected = len(list(monomials_of_degree(sub.nvars, D))) - len(std)
        assert expected == _dim_slice_free_of(gens, P7, D, 0)


@given(st.lists(homogeneous(P5, 1, max_terms=3), min_size=1, max_size=2),
       st.lists(homogeneous(P5, 2, max_terms=3), min_size=1, max_size=2))
def test_intersection_and_colon_laws(a, b):
    A, B = Ideal(P5, a), Ideal(P5, b)
    C = intersect(A, B)
    assert C.issubset(A) and C.issubset(B)
    assert (A * B).issubset(C)
    Q = colon(A, B)
    assert A.issubset(Q)
    assert (Q * B).issubset(A)


@given(st.data())
def test_gcd_divides_and_is_maximal(data):
    S = PolyRing(("Y0", "Y1", "Y2"), FieldSpec(0))
    a, b, c = (data.draw(polys(S, max_deg=2, max_terms=3)) for _ in range(3))
    if not a or not b or not c:
        return
    g = gcd_multivariate(a * c, b * c)
    syms = sympy.symbols("Y0 Y1 Y2")
    to = lambda p: sympy.Add(*[sympy.Rational(k.numerator, k.denominator) * sympy.Mul(*[s ** x for s, x in zip(syms, e)])
                                for e, k in p.items()])
    ref = sympy.gcd(to(a * c), to(b * c))
    assert sympy.simplify(to(g) / ref).is_number
