"""Rational data: validation, equivalence, composition, restriction, images."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .groebner import (
    DimensionReport,
    Ideal,
    divide_exact,
    eliminate,
    gcd_list,
    is_regular_mod,
    krull_dimension,
)
from .ring import Polynomial, PolyRing, substitute

RESERVED_TAGS = ("t", "u")

COND_I_AUTOMATIC = "automatic"
COND_I_VERIFIED = "verified-against-supplied-primes"
COND_I_UNVERIFIED = "unverified-warning"


class DatumError(ValueError):
    """The forms do not define a rational datum (or an operation's contract failed)."""


@dataclass(frozen=True)
class Validity:
    condition_ii: bool
    condition_i: str
    assumptions: tuple = ()

    @property
    def warnings(self) -> list:
        out = []
        if self.condition_i == COND_I_UNVERIFIED:
            out.append("condition (i) unverified: torsionfreeness over k[f] is assumed")
        return out + list(self.assumptions)


@dataclass(frozen=True, eq=False)
class RationalDatum:
    """Forms ``f_0..f_m`` of common degree ``d`` on ``R = k[X]/ideal``."""

    ideal: Ideal
    forms: tuple
    degree: int
    validity: Validity
    target_names: tuple
    primes: tuple = ()

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    @property
    def n(self) -> int:
        return self.ring.nvars - 1

    @property
    def m(self) -> int:
        return len(self.forms) - 1

    def target_ring(self) -> PolyRing:
        return PolyRing(self.target_names, self.ring.field)

    def __repr__(self):
        return f"RationalDatum({', '.join(map(str, self.forms))} over {self.ring})"


@dataclass(frozen=True)
class MapImage:
    ideal: Ideal
    dimension: DimensionReport

    @property
    def generators(self) -> list:
        return self.ideal.groebner()


def default_target_names(m: int, prefix: str = "Y") -> tuple:
    return tuple(f"{prefix}{j}" for j in range(m + 1))


def fresh_target_names(source: Sequence[str], count: int, preferred: Sequence[str] = ()) -> tuple:
    """``preferred`` when it avoids the source names, else the first clash-free prefix."""
    taken = set(source) | set(RESERVED_TAGS)
    if preferred and not taken & set(preferred):
        return tuple(preferred)
    for prefix in ("Y", "Z", "W", "V", "T"):
        names = default_target_names(count - 1, prefix)
        if not taken & set(names):
            return names
    k = 0
    while True:
        names = tuple(f"T{k}_{j}" for j in range(count))
        if not taken & set(names):
            return names
        k += 1


def check_names(source: Sequence[str], target: Sequence[str]):
    clash = set(source) & (set(target) | set(RESERVED_TAGS))
    if clash:
        raise DatumError(f"variable names {sorted(clash)} collide with reserved or target names")


def validate_datum(ideal: Ideal, forms: Sequence[Polynomial], primes: Sequence[Ideal] = (),
                   target_names: Sequence[str] | None = None,
                   prime_asserted: bool = False) -> RationalDatum:
    """Check the defining conditions and return a certified datum.

    ``primes`` are the minimal primes of ``ideal`` when known (trusted to be
    prime); they allow condition (i) to be decided.  ``prime_asserted`` marks
    ``ideal`` itself as prime.
    """
    ring = ideal.ring
    forms = tuple(ring.embed(f) for f in forms)
    if not forms:
        raise DatumError("a rational datum needs at least one form")
    target_names = tuple(target_names or default_target_names(len(forms) - 1))
    if len(target_names) != len(forms):
        raise DatumError("one target variable per form is required")
    check_names(ring.names, target_names)
    for g in ideal.gens:
        if not g.is_homogeneous():
            raise DatumError(f"source ideal generator {g} is not homogeneous")
    degs = set()
    for f in forms:
        if not f:
            continue
        d = f.weighted_degree()
        if d is None:
            raise DatumError(f"form {f} is not homogeneous")
        degs.add(d)
    if not degs:
        raise DatumError("all forms vanish")
    if len(degs) > 1:
        raise DatumError(f"forms have different degrees {sorted(degs)}")
    d = degs.pop()
    if d < 1:
        raise DatumError("forms must have degree at least 1")
    if all(ideal.contains(f) for f in forms):
        raise DatumError("all forms lie in the source ideal")
    if not is_regular_mod(Ideal(ring, forms), ideal):
        raise DatumError("condition (ii) fails: (f) lies in a minimal prime of the source")
    primes = tuple(Ideal(ring, P.gens) if P.ring != ring else P for P in primes)
    assumptions = []
    if ideal.is_zero():
        cond_i = COND_I_AUTOMATIC
    elif prime_asserted:
        cond_i = COND_I_AUTOMATIC
        assumptions.append("source ideal asserted prime (not verified)")
    elif primes:
        cond_i = _condition_i_from_primes(ideal, forms, primes, target_names, d)
        assumptions.append("supplied minimal primes trusted to be prime")
    else:
        cond_i = COND_I_UNVERIFIED
    return RationalDatum(ideal, forms, d, Validity(True, cond_i, tuple(assumptions)),
                         target_names, primes)


def _condition_i_from_primes(ideal, forms, primes, target_names, d):
    """Every minimal prime must contract to a minimal prime of k[f].

    With the complete list of minimal primes the contractions b_P are exactly
    the candidates for minimal primes of k[f]; condition (i) holds iff none
    of them strictly contains another.
    """
    for P in primes:
        if not ideal.issubset(P):
            raise DatumError(f"supplied prime {P} does not contain the source ideal")
    for P, Q in itertools.permutations(primes, 2):
        if Q.issubset(P) and not P.issubset(Q):
            raise DatumError(f"supplied prime {P} is not minimal (contains {Q})")
    product = primes[0]
    for P in primes[1:]:
        product = product * P
    if not product.issubset(ideal):
        return COND_I_UNVERIFIED
    contractions = [_image_ideal(P, forms, target_names, d) for P in primes]
    for a, b in itertools.permutations(contractions, 2):
        if a.issubset(b) and not b.issubset(a):
            raise DatumError("condition (i) fails: a minimal prime contracts to a non-minimal prime")
    return COND_I_VERIFIED


def identity_datum(ideal: Ideal, target_names=None) -> RationalDatum:
    return validate_datum(ideal, ideal.ring.gens(), target_names=target_names,
                          prime_asserted=False)


def datum_from_strings(names: Sequence[str], forms: Sequence[str], ideal: Sequence[str] = (),
                       characteristic: int = 32003, **kw) -> RationalDatum:
    from .ring import FieldSpec

    ring = PolyRing(tuple(names), FieldSpec(characteristic))
    return validate_datum(Ideal(ring, [ring.parse(s) for s in ideal]),
                          [ring.parse(s) for s in forms], **kw)


# -- equivalence ------------------------------------------------------------


def equivalent(f: RationalDatum | Sequence[Polynomial], g: RationalDatum | Sequence[Polynomial],
               ideal: Ideal | None = None) -> bool:
    """Rank-one test: 2x2 minors vanish mod the source ideal and the entries
    generate an ideal with a regular element."""
    if isinstance(f, RationalDatum):
        ideal = ideal or f.ideal
        f = f.forms
    if isinstance(g, RationalDatum):
        if ideal is not None and g.ring != ideal.ring:
            raise DatumError("data live on different source rings")
        ideal = ideal or g.ideal
        g = g.forms
    if ideal is None:
        raise DatumError("source ideal required")
    if len(f) != len(g):
        raise DatumError("equivalence needs the same number of forms")
    red = ideal.reducer()
    for i, j in itertools.combinations(range(len(f)), 2):
        if red(f[i] * g[j] - f[j] * g[i]):
            return False
    return is_regular_mod(Ideal(ideal.ring, list(f) + list(g)), ideal)


# -- image, composition, restriction -----------------------------------------


def _image_ideal(ideal: Ideal, forms, target_names, d) -> Ideal:
    ring = ideal.ring
    t = "t"
    big = PolyRing((t,) + ring.names + tuple(target_names), ring.field)
    tt = big.var(t)
    gens = [big.embed(g) for g in ideal.gens]
    gens += [big.var(y) - tt * big.embed(f) for y, f in zip(target_names, forms)]
    weights = [1] + [1] * ring.nvars + [d + 1] * len(target_names)
    out = eliminate(Ideal(big, gens), (t,) + ring.names, sugar_weights=weights)
    target = PolyRing(tuple(target_names), ring.field)
    return Ideal(target, [target.embed(g) for g in out.gens])


def image(f: RationalDatum) -> MapImage:
    """Ideal of all polynomial relations among the forms, with its dimension."""
    b = _image_ideal(f.ideal, f.forms, f.target_names, f.degree)
    return MapImage(b, krull_dimension(b))


def compose(g: RationalDatum, f: RationalDatum, image_ideal: Ideal | None = None) -> RationalDatum:
    """The datum g(f) on the source of f (degree deg f * deg g)."""
    if tuple(g.ring.names) != tuple(f.target_names):
        raise DatumError("g must be defined on the target variables of f")
    b = image_ideal if image_ideal is not None else image(f).ideal
    if b.ring != g.ring:
        b = Ideal(g.ring, b.gens)
    if not g.ideal.equals(b):
        raise DatumError("source ideal of g differs from the image ideal of f")
    red = f.ideal.reducer()
    comp = [red(substitute(gl, list(f.forms))) for gl in g.forms]
    try:
        names = fresh_target_names(f.ring.names, len(comp), g.target_names)
        return validate_datum(f.ideal, comp, primes=f.primes, target_names=names)
    except DatumError as exc:
        raise DatumError(f"composite is not a rational datum: {exc}") from exc


def restrict(f: RationalDatum, P: Ideal) -> RationalDatum:
    """Restriction of f to the component defined by the (asserted) prime P ⊇ a."""
    ring = f.ring
    if P.ring != ring:
        P = Ideal(ring, P.gens)
    if not f.ideal.issubset(P):
        raise DatumError("the source ideal is not contained in P")
    red = P.reducer()
    forms = [red(x) for x in f.forms]
    if all(not x for x in forms):
        raise DatumError("all forms vanish on the component")
    try:
        return validate_datum(P, forms, target_names=f.target_names, prime_asserted=True)
    except DatumError as exc:
        raise DatumError(f"restriction fails: {exc}") from exc


def minimalize(f: RationalDatum) -> RationalDatum:
    """Divide out the gcd of the forms when that keeps an equivalent datum.

    The result is also scaled so that its first nonzero form is monic.
    """
    nonzero = [x for x in f.forms if x]
    g = gcd_list(nonzero)
    lead = nonzero[0].leading_coefficient()
    if g and not g.is_constant():
        forms = [divide_exact(x, g) if x else x for x in f.forms]
        lead = next(x for x in forms if x).leading_coefficient()
    else:
        forms = list(f.forms)
    inv = f.ring.field.inv(lead)
    forms = [x.scale(inv) for x in forms]
    try:
        h = validate_datum(f.ideal, forms, primes=f.primes, target_names=f.target_names,
                           prime_asserted=bool(f.validity.assumptions)
                           and not f.primes and not f.ideal.is_zero())
    except DatumError:
        return f
    if not equivalent(h, f):
        return f
    return h
