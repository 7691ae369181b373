"""Hypothesis strategies for small polynomials and matrices."""

from hypothesis import strategies as st

from biratcheck.groebner import monomials_of_degree
from biratcheck.ring import FieldSpec, PolyRing


def exponents(nvars, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_deg).map(tuple)


def polys(ring: PolyRing, max_deg=3, max_terms=4, coeff=st.integers(-6, 6)):
    return st.dictionaries(exponents(ring.nvars, max_deg), coeff, max_size=max_terms).map(
        ring.from_dict)


def homogeneous(ring: PolyRing, deg, max_terms=4, coeff=st.integers(-6, 6)):
    monos = list(monomials_of_degree(ring.nvars, deg))
    return st.dictionaries(st.sampled_from(monos), coeff, min_size=1,
                           max_size=min(max_terms, len(monos))).map(ring.from_dict)


small_primes = st.sampled_from([2, 3, 5, 7, 32003])
fields = st.sampled_from([FieldSpec(2), FieldSpec(5), FieldSpec(32003), FieldSpec(0)])
