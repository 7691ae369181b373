import itertools

import sympy
from hypothesis import given
from hypothesis import strategies as st

from biratcheck.groebner import Ideal
from biratcheck.minors import bareiss_rank, det, rank_mod, signed_maximal_minors
from biratcheck.ring import FieldSpec, PolyRing
from strategies import homogeneous

Y = PolyRing(("Y0", "Y1", "Y2"))
F5 = PolyRing(("Y0", "Y1", "Y2"), FieldSpec(0))


def M(ring, rows):
    return [[ring.parse(x) for x in r] for r in rows]


def test_rank_examples():
    ident = M(Y, [["Y1", "-Y0", "0"], ["Y2", "0", "-Y0"]])
    assert rank_mod(ident, Ideal(Y, [])).rank == 2
    cre = M(Y, [["Y0", "-Y1", "0"], ["Y0", "0", "-Y2"]])
    res = rank_mod(cre, Ideal(Y, []))
    assert res.rank == 2 and res.defined
    assert rank_mod([], Ideal(Y, [])).rank == 0


def test_rank_mod_quotient():
    # Y0 vanishes mod (Y0): rank drops
    b = Ideal(Y, ["Y0"])
    assert rank_mod(M(Y, [["Y0", "0"], ["0", "Y1"]]), b).rank == 1


def test_rank_undefined_on_reducible_quotient():
    # diag(Y0, Y1) mod (Y0*Y1): every 2-minor is 0, every 1-minor a zero divisor but
    # together they generate a regular ideal
    b = Ideal(Y, ["Y0*Y1"])
    assert rank_mod(M(Y, [["Y0", "0"], ["0", "Y1"]]), b).rank == 1
    # a single zero divisor entry: rank undefined
    res = rank_mod(M(Y, [["Y0"]]), b)
    assert res.rank is None and not res.defined and res.naive_rank == 1


def test_signed_minors_cremona():
    cre = M(Y, [["Y0", "-Y1", "0"], ["Y0", "0", "-Y2"]])
    got = signed_maximal_minors(cre)
    assert got == [Y.parse(s) for s in ("Y1*Y2", "Y0*Y2", "Y0*Y1")]


def _sym(p):
    syms = sympy.symbols(p.ring.names)
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** a for s, a in zip(syms, e)])
                       for e, c in p.items()])


@given(st.integers(1, 3), st.data())
def test_det_matches_sympy(n, data):
    rows = [[data.draw(homogeneous(F5, 1, max_terms=2)) if data.draw(st.booleans()) else F5.zero()
             for _ in range(n)] for _ in range(n)]
    ref = sympy.Matrix([[_sym(x) for x in r] for r in rows]).det()
    assert sympy.expand(_sym(det(rows)) - ref) == 0


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_generic_rank_matches_sympy(m, n, data):
    rows = [[data.draw(homogeneous(F5, 1, max_terms=2)) if data.draw(st.booleans()) else F5.zero()
             for _ in range(n)] for _ in range(m)]
    r, R, C = bareiss_rank(rows)
    assert r == sympy.Matrix([[_sym(x) for x in row] for row in rows]).rank()
    if r:
        assert det([[rows[i][j] for j in C] for i in R])
    assert rank_mod(rows, Ideal(F5, [])).rank == r


@given(st.data())
def test_signed_minors_annihilate_rows(data):
    n = data.draw(st.integers(1, 3))
    rows = [[data.draw(homogeneous(F5, 1, max_terms=2)) for _ in range(n + 1)] for _ in range(n)]
    deltas = signed_maximal_minors(rows)
    for row in rows:
        s = F5.zero()
        for a, d in zip(row, deltas):
            s = s + a * d
        assert s.is_zero()
