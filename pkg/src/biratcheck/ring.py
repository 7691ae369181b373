"""Exact coefficients, monomial orders and sparse multivariate polynomials.

Polynomials are immutable maps from exponent tuples to nonzero coefficients.
Coefficients live in a prime field F_p (plain ints in ``range(p)``) or in the
rationals (``fractions.Fraction``).  The text grammar understood by
:func:`parse_poly` is the one emitted by ``str(poly)``.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Exponent = tuple  # tuple[int, ...]

#: exponents must stay below this bound so packed engine monomials do not overflow
MAX_DEGREE = 1 << 14


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0 or p % 3 == 0:
        return p in (2, 3)
    i = 5
    while i * i <= p:
        if p % i == 0 or p % (i + 2) == 0:
            return False
        i += 6
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``characteristic == 0`` means the rationals."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or p < 0:
            raise ValueError(f"characteristic must be a nonnegative integer, got {p!r}")
        if p and (p >= 1 << 31 or not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, x):
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        return Fraction(x)

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(c, -1, p) if p else 1 / c

    def signed(self, c):
        """Representative of smallest absolute value (used for printing)."""
        p = self.characteristic
        if p and c > p // 2:
            return c - p
        return c

    def __str__(self):
        return f"F_{self.characteristic}" if self.characteristic else "QQ"


QQ = FieldSpec(0)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by block structure and optional weights.

    ``kind`` is one of ``"grevlex"``, ``"lex"``, ``"block"`` (consecutive
    blocks of variables, each compared by grevlex, earlier blocks dominating)
    and ``"weighted"`` (a positive weight vector, ties broken by grevlex).
    """

    kind: str = "grevlex"
    blocks: tuple = ()
    weights: tuple = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block", "weighted"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and (not self.blocks or min(self.blocks) < 1):
            raise ValueError("block order needs positive block sizes")
        if self.kind == "weighted" and (not self.weights or min(self.weights) < 1):
            raise ValueError("weighted order needs positive integer weights")

    @classmethod
    def elimination(cls, split: int, nvars: int) -> "MonomialOrder":
        """Block order eliminating the first ``split`` variables."""
        return cls("block", blocks=(split, nvars - split))

    def matrix(self, nvars: int) -> list:
        """Integer rows whose lexicographic comparison defines the order."""
        if self.kind == "lex":
            return [[int(i == j) for j in range(nvars)] for i in range(nvars)]
        if self.kind == "grevlex":
            return _grevlex_rows(0, nvars, nvars)
        if self.kind == "weighted":
            if len(self.weights) != nvars:
                raise ValueError("weight vector length differs from variable count")
            return [list(self.weights)] + _grevlex_rows(0, nvars, nvars)
        if sum(self.blocks) != nvars:
            raise ValueError(f"blocks {self.blocks} do not cover {nvars} variables")
        rows, start = [], 0
        for size in self.blocks:
            rows += _grevlex_rows(start, size, nvars)
            start += size
        return rows

    def key_weights(self, nvars: int) -> tuple:
        """Weights ``w`` with ``sum(e_i * w_i)`` an integer key realising the order.

        The rows of :meth:`matrix` are packed in base ``2**BITS``; comparisons
        of keys agree with the order while every row value stays below
        ``2**(BITS-1)`` in absolute value.
        """
        return _key_weights(self, nvars)

    def key(self, exp: Sequence[int]) -> int:
        w = self.key_weights(len(exp))
        return sum(map(operator.mul, exp, w))

    def __str__(self):
        if self.kind == "block":
            return f"block{self.blocks}"
        if self.kind == "weighted":
            return f"weighted{self.weights}"
        return self.kind


KEY_BITS = 24


def _grevlex_rows(start, size, nvars):
    rows = [[int(start <= j < start + size) for j in range(nvars)]]
    for i in range(start + size - 1, start, -1):
        rows.append([-int(j == i) for j in range(nvars)])
    return rows


@lru_cache(maxsize=None)
def _key_weights(order, nvars):
    rows = order.matrix(nvars)
    base = 1 << KEY_BITS
    w = [0] * nvars
    for r, row in enumerate(rows):
        scale = base ** (len(rows) - 1 - r)
        for j, a in enumerate(row):
            w[j] += a * scale
    return tuple(w)


GREVLEX = MonomialOrder()
LEX = MonomialOrder("lex")

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring ``k[names]`` with a default monomial order.

    Ring identity is determined by the variable names and the field; the
    order only affects printing and the default Gröbner basis order.
    """

    names: tuple
    field: FieldSpec = dc_field(default=FieldSpec(32003))
    order: MonomialOrder = dc_field(default=GREVLEX, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for n in names:
            if not _NAME.match(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def index(self) -> dict:
        return _index(self.names)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, self.field, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exp, coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def var(self, name: str) -> "Polynomial":
        i = self.index[name]
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    def gens(self) -> list:
        return [self.var(n) for n in self.names]

    def from_dict(self, terms: Mapping) -> "Polynomial":
        f = self.field
        out = {}
        for e, c in terms.items():
            c = f(c)
            if c:
                out[tuple(e)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return self.embed(x)
        if isinstance(x, str):
            return parse_poly(x, self)
        return self.constant(x)

    def embed(self, p: "Polynomial", mapping: Mapping | None = None) -> "Polynomial":
        """Move ``p`` into this ring by variable name (or an explicit name map)."""
        if p.ring == self:
            return p if p.ring.order == self.order else Polynomial(self, p._terms)
        idx = self.index
        target = []
        for n in p.ring.names:
            n2 = mapping.get(n, n) if mapping else n
            target.append(idx.get(n2))
        out = {}
        nv = self.nvars
        for e, c in p._terms.items():
            ne = [0] * nv
            for i, a in enumerate(e):
                if a:
                    j = target[i]
                    if j is None:
                        raise ValueError(
                            f"variable {p.ring.names[i]} does not exist in target ring"
                        )
                    ne[j] += a
            out[tuple(ne)] = c
        if p.ring.field != self.field:
            return self.from_dict(out)
        return Polynomial(self, out)

    def __str__(self):
        return f"{self.field}[{', '.join(self.names)}]"


@lru_cache(maxsize=None)
def _index(names):
    return {n: i for i, n in enumerate(names)}


def _add_exp(a, b):
    return tuple(map(operator.add, a, b))


class Polynomial:
    """Immutable sparse polynomial; ``terms`` lists (exponent, coeff) descending."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # -- basic access -----------------------------------------------------
    @property
    def terms(self) -> list:
        key = _sort_key(self.ring.order, self.ring.nvars)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def leading_term(self, order: MonomialOrder | None = None):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = _sort_key(order or self.ring.order, self.ring.nvars)
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def monic(self, order=None) -> "Polynomial":
        if not self._terms:
            return self
        c = self.leading_coefficient(order)
        return self.scale(self.ring.field.inv(c))

    def coefficient(self, exp) -> object:
        return self._terms.get(tuple(exp), self.ring.field(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: int | str) -> int:
        i = self.ring.index[var] if isinstance(var, str) else var
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return self.weighted_degree(weights) is not None or not self._terms

    def weighted_degree(self, weights: Sequence[int] | None = None):
        """Common weighted degree of all terms, or ``None`` if inhomogeneous."""
        degs = set()
        for e in self._terms:
            degs.add(sum(e) if weights is None else sum(map(operator.mul, e, weights)))
            if len(degs) > 1:
                return None
        return degs.pop() if degs else None

    def support(self) -> set:
        """Indices of variables that occur."""
        out = set()
        for e in self._terms:
            out.update(i for i, a in enumerate(e) if a)
        return out

    def variables(self) -> list:
        return [self.ring.names[i] for i in sorted(self.support())]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ring.field.p
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, {e: (p - c if p else -c) for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        p = f.p
        if p:
            return Polynomial(self.ring, {e: v * c % p for e, v in self._terms.items()})
        return Polynomial(self.ring, {e: v * c for e, v in self._terms.items()})

    def mul_monomial(self, exp, c=1) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        p = f.p
        if p:
            return Polynomial(self.ring, {_add_exp(e, exp): v * c % p for e, v in self._terms.items()})
        return Polynomial(self.ring, {_add_exp(e, exp): v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return self.ring.zero()
        if len(a) < len(b):
            a, b = b, a
        p = self.ring.field.p
        out = {}
        get = out.get
        add = operator.add
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                v = get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        if p:
            out = {e: v % p for e, v in out.items() if v % p}
        else:
            out = {e: v for e, v in out.items() if v}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution ----------------------------------------
    def diff(self, var: int | str) -> "Polynomial":
        i = self.ring.index[var] if isinstance(var, str) else var
        f = self.ring.field
        out = {}
        for e, c in self._terms.items():
            a = e[i]
            if a:
                v = f(c * a)
                if v:
                    ne = list(e)
                    ne[i] -= 1
                    out[tuple(ne)] = v
        return Polynomial(self.ring, out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]`` (images share a common ring)."""
        return substitute(self, images)

    def evaluate(self, point: Sequence) -> object:
        f = self.ring.field
        total = f(0)
        vals = [f(v) for v in point]
        for e, c in self._terms.items():
            t = c
            for v, a in zip(vals, e):
                if a:
                    t = t * v ** a
            total = total + t
        return f(total)

    def coefficients_in(self, var_indices: Iterable[int]) -> dict:
        """Split by the exponents of ``var_indices``: {sub-exponent: polynomial}."""
        vi = tuple(var_indices)
        out: dict = {}
        for e, c in self._terms.items():
            key = tuple(e[i] for i in vi)
            rest = list(e)
            for i in vi:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {k: Polynomial(self.ring, v) for k, v in out.items()}

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


@lru_cache(maxsize=None)
def _sort_key(order, nvars):
    w = order.key_weights(nvars)
    return lambda e: sum(map(operator.mul, e, w))


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    if len(images) != p.ring.nvars:
        raise ValueError(f"expected {p.ring.nvars} images, got {len(images)}")
    if not images:
        return p
    target = images[0].ring
    for g in images:
        if g.ring != target:
            raise ValueError("images must share a ring")
    powers: dict = {}

    def power(i, a):
        key = (i, a)
        if key not in powers:
            powers[key] = images[i] if a == 1 else power(i, a - 1) * images[i]
        return powers[key]

    result = target.zero()
    for e, c in p._terms.items():
        t = target.constant(c)
        for i, a in enumerate(e):
            if a:
                t = t * power(i, a)
                if not t:
                    break
        result = result + t
    return result


def format_poly(p: Polynomial) -> str:
    if not p._terms:
        return "0"
    names = p.ring.names
    f = p.ring.field
    out = []
    for e, c in p.terms:
        c = f.signed(c)
        neg = c < 0
        c = -c if neg else c
        mono = "*".join(
            (names[i] if a == 1 else f"{names[i]}^{a}") for i, a in enumerate(e) if a
        )
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- parser ---------------------------------------------------------------


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", pos, text)
            toks.append(("op", ch, pos))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                v = v * self.unary()
            elif tok[:2] == ("op", "/"):
                self.take()
                d = self.take()
                if d[0] != "int":
                    self.error("division is only allowed by an integer literal", d)
                if d[1] == 0 or self.ring.field.p and d[1] % self.ring.field.p == 0:
                    self.error("division by zero", d)
                v = v.scale(self.ring.field.inv(self.ring.field(d[1])))
            else:
                return v

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok)
            self.take()
            if tok[1] >= MAX_DEGREE:
                self.error("exponent too large", tok)
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.ring.constant(val)
        if kind == "name":
            if val not in self.ring.index:
                self.error(f"unknown variable {val!r}", tok)
            return self.ring.var(val)
        if tok[:2] == ("op", "("):
            v = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            return v
        if kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` (integers, variables, ``+ - * ^ ( )``) into ``ring``.

    ``/`` followed by an integer literal is also accepted so that printed
    rational coefficients parse back.
    """
    return _Parser(text, ring).parse()


# -- bigrading ------------------------------------------------------------


@dataclass(frozen=True)
class Bigrading:
    """A weight pair per variable, e.g. X -> (1,0), Y -> (0,1), t -> (-d,1)."""

    weights: tuple  # one (p, q) pair per ring variable

    @classmethod
    def from_names(cls, ring: PolyRing, table: Mapping[str, tuple]) -> "Bigrading":
        return cls(tuple(tuple(table.get(n, (0, 0))) for n in ring.names))

    def of_exponent(self, e) -> tuple:
        p = q = 0
        for a, (wp, wq) in zip(e, self.weights):
            if a:
                p += a * wp
                q += a * wq
        return p, q


def bidegree(p: Polynomial, grading: Bigrading):
    """The common bidegree of all terms, or ``None`` when inhomogeneous (or zero)."""
    degs = {grading.of_exponent(e) for e in p._terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def standard_bigrading(ring: PolyRing, xs: Iterable[str], ys: Iterable[str],
                       t: str | None = None, d: int = 0) -> Bigrading:
    table = {n: (1, 0) for n in xs}
    table.update({n: (0, 1) for n in ys})
    if t is not None:
        table[t] = (-d, 1)
    return Bigrading.from_names(ring, table)
