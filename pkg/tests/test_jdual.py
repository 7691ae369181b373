import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biratcheck.groebner import Ideal
from biratcheck.jdual import (
    BIRATIONAL,
    INDETERMINATE,
    NOT_BIRATIONAL,
    decide_birational,
    jacobian_dual,
    jdrank,
    koszul_hilbert_check,
    linear_rank_test,
    semilinear_height_test,
    verify_inverse,
)
from biratcheck.ratmap import datum_from_strings, equivalent
from biratcheck.ring import FieldSpec, PolyRing
from strategies import homogeneous

X3 = ["X0", "X1", "X2"]
X4 = ["X0", "X1", "X2", "X3"]
CREMONA = ["X1*X2", "X0*X2", "X0*X1"]
SEGRE = ["X0*X2", "X0*X3", "X1*X2", "X1*X3"]


def d(names, forms, ideal=(), **kw):
    return datum_from_strings(names, forms, ideal, **kw)


def inv(forms, names=("Y0", "Y1", "Y2"), ideal=(), targets=X3):
    return datum_from_strings(list(names), forms, ideal, target_names=tuple(targets))


def test_psi_of_cremona():
    jd = jacobian_dual(d(X3, CREMONA))
    assert jd.dgi == 0 and jd.edim == 3
    assert len(jd.psi) == 2 and jd.jdrank == 2 and jd.jdrank_plus == 2


def test_psi_degenerate_rows():
    jd = jacobian_dual(d(X3, ["X1", "X2"], ["X0"]))
    assert jd.dgi == 1 and jd.edim == 2
    assert [str(x) for x in jd.psi[0]] == ["1", "0", "0"]


def test_identities_have_full_rank():
    for n in range(1, 5):
        names = [f"X{i}" for i in range(n + 1)]
        rep = decide_birational(d(names, names))
        assert rep.jdrank == n and rep.verdict == BIRATIONAL
        assert [str(x) for x in rep.inverse.forms] == [f"Y{i}" for i in range(n + 1)]


def test_segre_not_birational():
    rep = jdrank(d(X4, SEGRE))
    assert rep.verdict == NOT_BIRATIONAL and rep.jdrank <= 2
    assert rep.source_dim - rep.image_dim <= 3 - rep.jdrank


def test_cremona_inverse():
    f = d(X3, CREMONA)
    rep = decide_birational(f)
    assert rep.verdict == BIRATIONAL and rep.inverse_verified
    assert equivalent(rep.inverse, inv(["Y1*Y2", "Y0*Y2", "Y0*Y1"]))


def test_verify_inverse_examples():
    f = d(X3, CREMONA)
    assert verify_inverse(f, inv(["Y1*Y2", "Y0*Y2", "Y0*Y1"]))
    ident = d(X3, X3)
    assert verify_inverse(ident, inv(["Y0", "Y1", "Y2"]))
    assert not verify_inverse(f, inv(["Y0", "Y1", "Y2"]))


def test_indeterminate_never_decides():
    f = d(X4, ["X0^2", "X0*X1", "X1^2", "X2^2", "X3^2"],
          ["X0*X2", "X0*X3", "X1*X2", "X1*X3"], primes=[
              Ideal(PolyRing(tuple(X4)), ["X0", "X1"]), Ideal(PolyRing(tuple(X4)), ["X2", "X3"])])
    rep = decide_birational(f)
    assert rep.verdict == INDETERMINATE and rep.jdrank is None
    assert rep.inverse is None and rep.naive_rank == 3


def test_two_lines_not_birational():
    R = PolyRing(tuple(X3))
    f = d(X3, ["X0 + X1", "X2"], ["X0*X1"], primes=[Ideal(R, ["X0"]), Ideal(R, ["X1"])])
    rep = decide_birational(f)
    assert rep.verdict == NOT_BIRATIONAL
    assert len(rep.components) == 2


def test_skew_lines_identity_needs_null_space():
    R = PolyRing(tuple(X4))
    f = d(X4, X4, ["X0*X2", "X0*X3", "X1*X2", "X1*X3"],
          primes=[Ideal(R, ["X0", "X1"]), Ideal(R, ["X2", "X3"])])
    rep = decide_birational(f)
    assert rep.verdict == BIRATIONAL and rep.inverse_verified
    assert any("null space" in n for n in rep.diagnostics)


def test_linear_rank_examples():
    assert not linear_rank_test(d(X4, SEGRE)).fires
    assert linear_rank_test(d(X3, CREMONA)).fires
    assert linear_rank_test(d(X3, ["X1", "X2"], ["X0"])).detail["status"] == "not-applicable"


def test_semilinear_height_examples():
    t = semilinear_height_test(d(X3, CREMONA))
    assert t.fires and t.detail["codim"] == 2 and t.detail["dim_quotient"] == 4
    assert semilinear_height_test(d(X3, X3)).fires


def test_koszul_examples():
    Y = PolyRing(("Y0", "Y1", "Y2"))
    rho = [[Y.parse(a) for a in r] for r in (["Y0", "Y0"], ["-Y1", "0"], ["0", "-Y2"])]
    assert koszul_hilbert_check(rho).ok
    a, b = Y.parse("Y0 + Y1"), Y.parse("Y2")
    assert koszul_hilbert_check([[a], [b]]).ok
    with pytest.raises(ValueError):
        koszul_hilbert_check([[a, b]])


F5 = PolyRing(("Y0", "Y1", "Y2"), FieldSpec(5))


@settings(max_examples=120)
@given(st.integers(1, 3), st.data())
def test_koszul_hilbert_random_linear_matrices(n, data):
    rho = [[data.draw(homogeneous(F5, 1, max_terms=3)) for _ in range(n)] for _ in range(n + 1)]
    assert koszul_hilbert_check(rho).ok


@settings(max_examples=20)
@given(st.sampled_from([5, 7, 32003]), st.sampled_from([
    (X3, CREMONA), (X4, SEGRE), (["X0", "X1"], ["X0^2", "X0*X1", "X1^2"]),
    (X3, ["X0^2", "X0*X1", "X1*X2"]), (X3, ["X0^2", "X1^2", "X2^2"])]))
def test_rank_bounds_and_verdict_consistency(p, case):
    f = d(*case, characteristic=p)
    rep = decide_birational(f)
    assert rep.jdrank is not None
    assert rep.dgi <= rep.jdrank <= rep.n
    assert rep.source_dim - rep.image_dim <= rep.n - rep.jdrank
    if rep.verdict == BIRATIONAL:
        assert rep.image_dim == rep.source_dim and verify_inverse(f, rep.inverse)
    assert not rep.warnings
