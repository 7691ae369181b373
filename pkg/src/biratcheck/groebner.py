"""Buchberger's algorithm and the ideal operations built on it.

Internally monomials are pairs of integers: an order key (a linear form in
the exponents, so products are sums) and a packed exponent vector with a
guard bit per field (divisibility is a single subtraction and mask).
"""

from __future__ import annotations

import heapq
import itertools
import math
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .ring import GREVLEX, MonomialOrder, Polynomial, PolyRing

EXP_BITS = 16
_FIELD_MASK = (1 << EXP_BITS) - 1


class _Elem:
    __slots__ = ("lmkey", "lmpk", "lmexp", "tail", "sugar", "size")

    def __init__(self, terms, sugar):
        # terms: list of (key, pk, coeff) sorted descending, leading coeff 1
        self.lmkey, self.lmpk, _ = terms[0]
        self.tail = terms[1:]
        self.sugar = sugar
        self.lmexp = None
        self.size = len(terms)


class _Reducers:
    """Reducer list with a per-monomial lookup cache."""

    def __init__(self, guard):
        self.items = []
        self.cache = {}
        self.guard = guard

    def add(self, elem):
        self.items.append((elem.lmpk, elem))

    def find(self, key, pk):
        hit = self.cache.get(key)
        start = 0
        if hit is not None:
            if hit[0] is not None:
                return hit[0]
            start = hit[1]
        G = self.guard
        tg = pk | G
        items = self.items
        for idx in range(start, len(items)):
            lp, g = items[idx]
            if (tg - lp) & G == G:
                self.cache[key] = (g, 0)
                return g
        self.cache[key] = (None, len(items))
        return None


class _Engine:
    def __init__(self, ring: PolyRing, order: MonomialOrder, sugar_weights=None):
        n = ring.nvars
        self.ring = ring
        self.n = n
        self.p = ring.field.p
        self.w = order.key_weights(n)
        self.sw = tuple(sugar_weights) if sugar_weights else (1,) * n
        self.shifts = tuple(EXP_BITS * i for i in range(n))
        self.guard = sum(1 << (s + EXP_BITS - 1) for s in self.shifts)
        self.pex = {}

    # -- conversion -------------------------------------------------------
    def encode(self, e):
        key = sum(map(operator.mul, e, self.w))
        if key not in self.pex:
            self.pex[key] = sum(a << s for a, s in zip(e, self.shifts))
        return key

    def unpack(self, pk):
        return tuple((pk >> s) & _FIELD_MASK for s in self.shifts)

    def pack(self, e):
        return sum(a << s for a, s in zip(e, self.shifts))

    def to_engine(self, poly: Polynomial) -> dict:
        return {self.encode(e): c for e, c in poly.items()}

    def from_engine(self, d: dict, ring=None) -> Polynomial:
        ring = ring or self.ring
        pex = self.pex
        return Polynomial(ring, {self.unpack(pex[k]): c for k, c in d.items()})

    def wdeg(self, e):
        return sum(map(operator.mul, e, self.sw))

    def make_elem(self, d: dict, sugar=None) -> _Elem:
        keys = sorted(d, reverse=True)
        lc = d[keys[0]]
        p = self.p
        if p:
            inv = pow(lc, -1, p)
            terms = [(k, self.pex[k], d[k] * inv % p) for k in keys]
        else:
            inv = 1 / lc
            terms = [(k, self.pex[k], d[k] * inv) for k in keys]
        el = _Elem(terms, 0)
        el.lmexp = self.unpack(el.lmpk)
        if sugar is None:
            sugar = max(self.wdeg(self.unpack(t[1])) for t in terms)
        el.sugar = sugar
        return el

    # -- reduction --------------------------------------------------------
    def reduce(self, f: dict, red: _Reducers) -> dict:
        """Full reduction of ``f`` (consumed) by ``red``; returns the remainder."""
        p = self.p
        pex = self.pex
        heap = [-k for k in f]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        find = red.find
        rem = {}
        while heap:
            k = -pop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            t = pex[k]
            g = find(k, t)
            if g is None:
                rem[k] = c
                continue
            km = k - g.lmkey
            pm = t - g.lmpk
            get = f.get
            if p:
                for kg, pg, cg in g.tail:
                    kk = kg + km
                    v = get(kk)
                    if v is None:
                        if kk not in pex:
                            pex[kk] = pg + pm
                        f[kk] = -c * cg % p
                        push(heap, -kk)
                    else:
                        v = (v - c * cg) % p
                        if v:
                            f[kk] = v
                        else:
                            del f[kk]
            else:
                for kg, pg, cg in g.tail:
                    kk = kg + km
                    v = get(kk)
                    if v is None:
                        if kk not in pex:
                            pex[kk] = pg + pm
                        f[kk] = -c * cg
                        push(heap, -kk)
                    else:
                        v = v - c * cg
                        if v:
                            f[kk] = v
                        else:
                            del f[kk]
        return rem

    def reduce_with_quotients(self, f: dict, elems: list):
        """Division algorithm recording quotients (used for exact division)."""
        p = self.p
        pex = self.pex
        red = _Reducers(self.guard)
        for e in elems:
            red.add(e)
        index = {id(e): i for i, e in enumerate(elems)}
        quots = [dict() for _ in elems]
        heap = [-k for k in f]
        heapq.heapify(heap)
        rem = {}
        while heap:
            k = -heapq.heappop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            t = pex[k]
            g = red.find(k, t)
            if g is None:
                rem[k] = c
                continue
            km = k - g.lmkey
            pm = t - g.lmpk
            if km not in pex:
                pex[km] = pm
            q = quots[index[id(g)]]
            q[km] = (q.get(km, 0) + c) % p if p else q.get(km, 0) + c
            for kg, pg, cg in g.tail:
                kk = kg + km
                v = f.get(kk)
                if v is None:
                    if kk not in pex:
                        pex[kk] = pg + pm
                    f[kk] = -c * cg % p if p else -c * cg
                    heapq.heappush(heap, -kk)
                else:
                    v = (v - c * cg) % p if p else v - c * cg
                    if v:
                        f[kk] = v
                    else:
                        del f[kk]
        return quots, rem

    # -- Buchberger -------------------------------------------------------
    def lcm_exp(self, a, b):
        return tuple(map(max, a, b))

    def groebner(self, polys: Sequence[dict]) -> list:
        """Reduced Gröbner basis (list of _Elem) of the engine dicts."""
        G = []  # every element ever added (all remain valid reducers)
        active = []  # indices forming the current minimal basis
        pairs = {}
        heap = []
        red = _Reducers(self.guard)
        guard = self.guard
        p = self.p
        pex = self.pex
        counter = itertools.count()

        def divides(a_pk, b_pk):
            return ((b_pk | guard) - a_pk) & guard == guard

        def add(elem):
            h = len(G)
            G.append(elem)
            red.add(elem)
            lmh = elem.lmexp
            # Gebauer-Moeller update
            C = []
            for g in active:
                lg = G[g].lmexp
                l = self.lcm_exp(lmh, lg)
                coprime = all(not (a and b) for a, b in zip(lmh, lg))
                C.append((g, l, self.pack(l), coprime))
            D = []
            for idx, (g, l, lpk, coprime) in enumerate(C):
                if coprime:
                    D.append((g, l, lpk, coprime))
                    continue
                if any(divides(c[2], lpk) for c in C[idx + 1:]):
                    continue
                if any(divides(d[2], lpk) for d in D):
                    continue
                D.append((g, l, lpk, coprime))
            hpk = elem.lmpk
            for key in list(pairs):
                i, j = key
                rec = pairs[key]
                l = rec[1]
                if divides(hpk, rec[2]):
                    if (self.lcm_exp(G[i].lmexp, lmh) != l
                            and self.lcm_exp(G[j].lmexp, lmh) != l):
                        del pairs[key]
            for g, l, lpk, coprime in D:
                if coprime:
                    continue
                gi = G[g]
                wl = self.wdeg(l)
                sugar = max(gi.sugar + wl - self.wdeg(gi.lmexp), elem.sugar + wl - self.wdeg(lmh))
                lkey = sum(map(operator.mul, l, self.w))
                if lkey not in pex:
                    pex[lkey] = lpk
                rec = (sugar, l, lpk, lkey)
                pairs[(g, h)] = rec
                heapq.heappush(heap, (sugar, lkey, next(counter), g, h))
            active[:] = [g for g in active if not divides(hpk, G[g].lmpk)]
            active.append(h)

        # seed with the inputs, lowest sugar first
        seeds = []
        for d in polys:
            if d:
                el = self.make_elem(d)
                seeds.append((el.sugar, el.lmkey, next(counter), d))
        seeds.sort()
        for sugar, _, _, d in seeds:
            rem = self.reduce(dict(d), red)
            if rem:
                el = self.make_elem(rem, sugar)
                if not any(el.lmexp):
                    return [self.make_elem({el.lmkey: 1})]
                add(el)

        while heap:
            sugar, lkey, _, i, j = heapq.heappop(heap)
            if pairs.pop((i, j), None) is None:
                continue
            gi, gj = G[i], G[j]
            k1 = lkey - gi.lmkey
            k2 = lkey - gj.lmkey
            lpk = pex[lkey]
            p1 = lpk - gi.lmpk
            p2 = lpk - gj.lmpk
            s = {}
            for kg, pg, cg in gi.tail:
                kk = kg + k1
                if kk not in pex:
                    pex[kk] = pg + p1
                s[kk] = cg
            for kg, pg, cg in gj.tail:
                kk = kg + k2
                if kk not in pex:
                    pex[kk] = pg + p2
                v = s.get(kk)
                if v is None:
                    s[kk] = -cg % p if p else -cg
                else:
                    v = (v - cg) % p if p else v - cg
                    if v:
                        s[kk] = v
                    else:
                        del s[kk]
            rem = self.reduce(s, red)
            if rem:
                el = self.make_elem(rem, sugar)
                if not any(el.lmexp):
                    return [self.make_elem({el.lmkey: 1})]
                add(el)

        # interreduce the minimal basis
        basis = [G[i] for i in active]
        basis.sort(key=lambda e: e.lmkey)
        out = []
        for idx, el in enumerate(basis):
            red2 = _Reducers(guard)
            for jdx, other in enumerate(basis):
                if jdx != idx:
                    red2.add(other)
            tail = {k: c for k, _, c in el.tail}
            rem = self.reduce(tail, red2)
            rem[el.lmkey] = 1
            out.append(self.make_elem(rem, el.sugar))
        return out


def _engine_for(ring, order, sugar_weights=None):
    return _Engine(ring, order or ring.order, sugar_weights)


def groebner_basis(gens: Iterable[Polynomial], order: MonomialOrder | None = None,
                   ring: PolyRing | None = None, sugar_weights=None) -> list:
    """Reduced Gröbner basis, monic, sorted by increasing leading monomial."""
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    order = order or ring.order
    eng = _Engine(ring, order, sugar_weights)
    elems = eng.groebner([eng.to_engine(g) for g in gens if g])
    return [_elem_to_poly(eng, e) for e in elems]


def _elem_to_poly(eng, el):
    f = eng.ring.field
    terms = {eng.unpack(el.lmpk): f(1)}
    for _, pk, c in el.tail:
        terms[eng.unpack(pk)] = c
    return Polynomial(eng.ring, terms)


class Reducer:
    """Normal forms modulo a fixed Gröbner basis."""

    def __init__(self, basis: Sequence[Polynomial], order: MonomialOrder | None = None,
                 ring: PolyRing | None = None):
        ring = ring or (basis[0].ring if basis else None)
        if ring is None:
            raise ValueError("ring required for an empty basis")
        self.ring = ring
        self.order = order or ring.order
        self.engine = _Engine(ring, self.order)
        self.basis = list(basis)
        self.elems = [self.engine.make_elem(self.engine.to_engine(g)) for g in basis if g]
        self.red = _Reducers(self.engine.guard)
        for e in self.elems:
            self.red.add(e)

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            p = self.ring.embed(p)
        if not self.elems or not p:
            return p
        eng = self.engine
        rem = eng.reduce(eng.to_engine(p), self.red)
        return eng.from_engine(rem, p.ring)

    def is_zero(self, p: Polynomial) -> bool:
        return not self(p)


def normal_form(p: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``p`` on division by a Gröbner basis (zero iff p is in the ideal)."""
    if not basis:
        return p
    return Reducer(basis, order, p.ring)(p)


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    order = order or f.ring.order
    (ef, cf), (eg, cg) = f.leading_term(order), g.leading_term(order)
    l = tuple(map(max, ef, eg))
    field = f.ring.field
    a = f.mul_monomial(tuple(x - y for x, y in zip(l, ef)), field.inv(cf))
    b = g.mul_monomial(tuple(x - y for x, y in zip(l, eg)), field.inv(cg))
    return a - b


def divide(a: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Multivariate division: returns (quotients, remainder)."""
    order = order or a.ring.order
    eng = _Engine(a.ring, order)
    elems = []
    lcs = []
    for d in divisors:
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        elems.append(eng.make_elem(eng.to_engine(d)))
        lcs.append(d.leading_coefficient(order))
    quots, rem = eng.reduce_with_quotients(eng.to_engine(a), elems)
    field = a.ring.field
    out = []
    for q, lc in zip(quots, lcs):
        out.append(eng.from_engine(q, a.ring).scale(field.inv(lc)))
    return out, eng.from_engine(rem, a.ring)


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    (q,), r = divide(a, [b])
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


# -- ideals ---------------------------------------------------------------


class Ideal:
    """A finitely generated ideal with reduced Gröbner bases cached per order."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = (), sugar_weights=None):
        self.ring = ring
        gl = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif g.ring != ring:
                g = ring.embed(g)
            if g:
                gl.append(g)
        self.gens = tuple(gl)
        self.sugar_weights = sugar_weights
        self._gb = {}
        self._red = {}

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"

    def groebner(self, order: MonomialOrder | None = None) -> list:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            gb = groebner_basis(self.gens, order, self.ring, self.sugar_weights)
            self._gb[order] = gb
        return gb

    def reducer(self, order: MonomialOrder | None = None) -> Reducer:
        order = order or self.ring.order
        r = self._red.get(order)
        if r is None:
            r = Reducer(self.groebner(order), order, self.ring)
            self._red[order] = r
        return r

    def reduce(self, p: Polynomial, order=None) -> Polynomial:
        return self.reducer(order)(p)

    def contains(self, p) -> bool:
        if isinstance(p, str):
            p = self.ring.parse(p)
        return not self.reduce(p)

    __contains__ = contains

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "Ideal") -> bool:
        """Ideal equality by mutual normal-form reduction."""
        return self.issubset(other) and other.issubset(self)

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + tuple(self.ring.embed(g) for g in other.gens))
        return Ideal(self.ring, self.gens + tuple(other))

    def __mul__(self, other: "Ideal"):
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def degree_part(self, d: int) -> list:
        """Generators of degree ``d`` in the reduced grevlex basis (a k-basis of I_d when
        the ideal is homogeneous and d is the least generator degree, e.g. d = 1)."""
        return [g for g in self.groebner(GREVLEX) if g.total_degree() == d and g.is_homogeneous()]


def _fresh_name(ring: PolyRing, base: str) -> str:
    name = base
    k = 0
    while name in ring.index:
        k += 1
        name = f"{base}_{k}"
    return name


def eliminate(I: Ideal, drop: Iterable[str], sugar_weights=None) -> Ideal:
    """Generators of ``I ∩ k[remaining variables]`` (in the subring of those variables)."""
    ring = I.ring
    drop = [n for n in ring.names if n in set(drop)]
    keep = [n for n in ring.names if n not in set(drop)]
    sub = PolyRing(tuple(keep), ring.field, ring.order)
    if not drop:
        return Ideal(sub, [sub.embed(g) for g in I.gens])
    big = PolyRing(tuple(drop + keep), ring.field)
    order = MonomialOrder("block", blocks=(len(drop), len(keep))) if keep else GREVLEX
    sw = None
    if sugar_weights is not None:
        sw = [sugar_weights[ring.index[n]] for n in drop + keep]
    gb = groebner_basis([big.embed(g) for g in I.gens], order, big, sw)
    nd = len(drop)
    out = []
    for g in gb:
        if not any(any(e[:nd]) for e, _ in g.items()):
            out.append(_drop_prefix(g, sub, nd))
    return Ideal(sub, out)


def _drop_prefix(g, sub, nd):
    return Polynomial(sub, {e[nd:]: c for e, c in g.items()})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via a tag variable u: (u·I + (1-u)·J) ∩ k[vars]."""
    ring = I.ring
    u = _fresh_name(ring, "u")
    big = PolyRing((u,) + ring.names, ring.field)
    uu = big.var(u)
    gens = [uu * big.embed(g) for g in I.gens] + [(1 - uu) * big.embed(g) for g in J.gens]
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    order = MonomialOrder("block", blocks=(1, ring.nvars))
    gb = groebner_basis(gens, order, big)
    out = [_drop_prefix(g, ring, 1) for g in gb if not any(e[0] for e, _ in g.items())]
    return Ideal(ring, out)


def colon_element(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g) = (I ∩ (g)) / g."""
    ring = I.ring
    if not g:
        return Ideal(ring, [ring.one()])
    if not I.gens:
        return Ideal(ring, [])
    inter = intersect(I, Ideal(ring, [g]))
    return Ideal(ring, [divide_exact(h, g) for h in inter.gens])


def colon(I: Ideal, J: Ideal) -> Ideal:
    """The ideal quotient (I : J) = ∩_j (I : g_j); (I : 0) is the unit ideal."""
    ring = I.ring
    gens = [ring.embed(g) for g in J.gens]
    if not gens:
        return Ideal(ring, [ring.one()])
    result = None
    for g in gens:
        q = colon_element(I, g)
        result = q if result is None else intersect(result, q)
        if result.is_zero():
            break
    return result


def is_regular_mod(K: Ideal, b: Ideal, single_first: bool = True) -> bool:
    """Does (K + b)/b contain a nonzerodivisor of k[vars]/b?  (b radical, trusted.)

    Decided by (b : K) == b.
    """
    ring = b.ring
    kg = [ring.embed(g) for g in K.gens]
    kg = [g for g in kg if not b.contains(g)]
    if not kg:
        return False
    if b.is_zero():
        return True
    if b.is_unit():
        return False
    if any(g.is_constant() for g in kg):
        return True
    q = colon(b, Ideal(ring, kg))
    return q.issubset(b)


# -- dimension ------------------------------------------------------------

EMPTY_DIM = -math.inf


@dataclass(frozen=True)
class DimensionReport:
    """Affine Krull dimension of ring/I; ``krull_dim`` is -inf for the unit ideal."""

    krull_dim: float
    codim: int
    nvars: int

    @property
    def empty(self) -> bool:
        return self.krull_dim == EMPTY_DIM


def leading_dimension(lead_exps: Sequence[tuple], nvars: int) -> int:
    """Largest U with no leading monomial supported inside U."""
    masks = set()
    for e in lead_exps:
        masks.add(sum(1 << i for i, a in enumerate(e) if a))
    if 0 in masks:
        return -1
    masks = list(masks)
    for size in range(nvars, -1, -1):
        for U in itertools.combinations(range(nvars), size):
            um = sum(1 << i for i in U)
            if all(m & ~um for m in masks):
                return size
    return 0


def krull_dimension(I: Ideal) -> DimensionReport:
    n = I.ring.nvars
    gb = I.groebner(GREVLEX)
    if any(g.is_constant() for g in gb):
        return DimensionReport(EMPTY_DIM, n, n)
    d = leading_dimension([g.leading_monomial(GREVLEX) for g in gb], n)
    return DimensionReport(d, n - d, n)


# -- fixed-degree linear algebra --------------------------------------------


def monomials_of_degree(nvars: int, d: int):
    """Exponent tuples of total degree ``d`` (descending lex)."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            yield (a,) + rest


def kernel_slice(forms: Sequence[Polynomial], ideal: Ideal | None = None) -> list:
    """k-basis of {(c_ij) : sum_ij c_ij X_i f_j ≡ 0 mod ideal}.

    Each solution is returned as a list (over j) of linear forms sum_i c_ij X_i,
    i.e. one linear syzygy of the forms.
    """
    if not forms:
        return []
    ring = forms[0].ring
    n = ring.nvars
    m = len(forms)
    red = ideal.reducer(GREVLEX) if ideal is not None and not ideal.is_zero() else None
    gens = ring.gens()
    columns = []  # one per unknown (i, j)
    for j, f in enumerate(forms):
        for i in range(n):
            prod = gens[i] * f
            if red is not None:
                prod = red(prod)
            columns.append(prod)
    monos = sorted({e for c in columns for e in c._terms})
    if not monos:
        vecs = linalg.nullspace([], len(columns), ring.field.p)
    else:
        rows = [[c.coefficient(e) for c in columns] for e in monos]
        vecs = linalg.nullspace(rows, len(columns), ring.field.p)
    out = []
    for v in vecs:
        syz = []
        for j in range(m):
            lin = ring.zero()
            for i in range(n):
                c = v[j * n + i]
                if c:
                    lin = lin + gens[i].scale(c)
            syz.append(lin)
        out.append(syz)
    return out


# -- gcd ------------------------------------------------------------------


def _monomial_content(p: Polynomial):
    exps = list(p._terms)
    return tuple(min(col) for col in zip(*exps))


def gcd_multivariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via recursive content / primitive-part and pseudo-remainders."""
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    if not a:
        return b.monic(GREVLEX)
    if not b:
        return a.monic(GREVLEX)
    ring = a.ring
    ma, mb = _monomial_content(a), _monomial_content(b)
    mono = tuple(map(min, ma, mb))
    a = _shift_down(a, ma)
    b = _shift_down(b, mb)
    g = _gcd_rec(a, b)
    return g.mul_monomial(mono).monic(GREVLEX)


def _shift_down(p, e):
    return Polynomial(p.ring, {tuple(x - y for x, y in zip(k, e)): c for k, c in p._terms.items()})


def _main_var(a, b):
    s = a.support() | b.support()
    return max(s) if s else None


def _coeffs_in(p, v):
    """Coefficients of p as a polynomial in variable index v: {deg: poly}."""
    out = {}
    for e, c in p._terms.items():
        k = e[v]
        ne = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[ne] = c
    return {k: Polynomial(p.ring, d) for k, d in out.items()}


def _content(p, v):
    cs = list(_coeffs_in(p, v).values())
    g = cs[0]
    for c in cs[1:]:
        if g.is_constant():
            break
        g = _gcd_rec(g, c)
    return g.monic(GREVLEX) if g else g


def _gcd_rec(a: Polynomial, b: Polynomial) -> Polynomial:
    ring = a.ring
    if not a:
        return b.monic(GREVLEX)
    if not b:
        return a.monic(GREVLEX)
    if a.is_constant() or b.is_constant():
        return ring.one()
    v = _main_var(a, b)
    da, db = a.degree_in(v), b.degree_in(v)
    if da == 0:
        return _gcd_rec(a, _content(b, v))
    if db == 0:
        return _gcd_rec(_content(a, v), b)
    ca, cb = _content(a, v), _content(b, v)
    pa, pb = divide_exact(a, ca), divide_exact(b, cb)
    c = _gcd_rec(ca, cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while pb:
        if pb.degree_in(v) == 0:
            pa = ring.one()
            break
        r = _prem(pa, pb, v)
        pa, pb = pb, r
        if pb:
            pb = divide_exact(pb, _content(pb, v))
    if pa.degree_in(v) > 0:
        pa = divide_exact(pa, _content(pa, v))
    return (c * pa).monic(GREVLEX)


def _prem(a, b, v):
    """Pseudo-remainder of a by b with respect to variable index v."""
    db = b.degree_in(v)
    lcb = _coeffs_in(b, v)[db]
    r = a
    unit = tuple(int(i == v) for i in range(a.ring.nvars))
    while r and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lcr = _coeffs_in(r, v)[dr]
        shift = tuple(x * (dr - db) for x in unit)
        r = lcb * r - (lcr * b).mul_monomial(shift)
    return r


def gcd_list(polys: Sequence[Polynomial]) -> Polynomial:
    g = None
    for p in polys:
        if g is None:
            g = p.monic(GREVLEX) if p else p
        else:
            g = gcd_multivariate(g, p)
        if g and g.is_constant():
            break
    return g
