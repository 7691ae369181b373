"""Problem files: a small sectioned text format and its JSON equivalent.

Text form::

    # quadratic plane Cremona map
    characteristic: 32003
    variables: X0, X1, X2
    [ideal]
    [map]
    X1*X2
    X0*X2
    X0*X1
    [prime]        (repeatable; generators of one minimal prime per section)
    [options]
    degree_cap: 4

JSON form: an object with keys ``characteristic``, ``source_vars``,
``ideal``, ``map``, and optionally ``minimal_primes`` (a list of generator
lists) and ``options``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .config import DEFAULT_CHARACTERISTIC
from .groebner import Ideal
from .ratmap import RationalDatum, validate_datum
from .ring import GREVLEX, LEX, FieldSpec, ParseError, PolyRing

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_SECTIONS = ("ideal", "map", "prime", "options")
_OPTION_KEYS = ("degree_cap", "order")


class ProblemError(ValueError):
    """Malformed problem file; the message carries a source position."""


@dataclass
class Problem:
    characteristic: int
    source_vars: list
    ideal: list
    map: list
    minimal_primes: list = field(default_factory=list)
    options: dict = field(default_factory=dict)
    origin: str = "<string>"
    lines: dict = field(default_factory=dict)  # (section, index) -> line number

    def echo(self) -> dict:
        out = {
            "characteristic": self.characteristic,
            "source_vars": list(self.source_vars),
            "ideal": list(self.ideal),
            "map": list(self.map),
            "minimal_primes": [list(p) for p in self.minimal_primes],
        }
        if self.options:
            out["options"] = {k: self.options[k] for k in _OPTION_KEYS if k in self.options}
        return out

    def ring(self, order: str = "grevlex") -> PolyRing:
        return PolyRing(tuple(self.source_vars), FieldSpec(self.characteristic),
                        LEX if order == "lex" else GREVLEX)

    def _parse(self, ring, text, section, idx):
        try:
            return ring.parse(text)
        except ParseError as exc:
            line = self.lines.get((section, idx))
            where = f"{self.origin}:{line}:{exc.position + 1}" if line else \
                f"{self.origin}:{section}[{idx}]:{exc.position + 1}"
            raise ProblemError(f"{where}: {exc.message}") from exc

    def _parse_ideal(self, ring, gens, k=0) -> Ideal:
        return Ideal(ring, [self._parse(ring, s, "prime", k) for s in gens])

    def datum(self, order: str = "grevlex", target_names=None, primes: list | None = None) -> RationalDatum:
        ring = self.ring(order)
        ideal = Ideal(ring, [self._parse(ring, s, "ideal", i) for i, s in enumerate(self.ideal)])
        forms = [self._parse(ring, s, "map", i) for i, s in enumerate(self.map)]
        plist = self.minimal_primes if primes is None else primes
        P = [self._parse_ideal(ring, gens, k) for k, gens in enumerate(plist)]
        return validate_datum(ideal, forms, primes=P, target_names=target_names)


def _split_list(value: str) -> list:
    return [v.strip() for v in value.split(",") if v.strip()]


def _check_names(names, origin):
    if not names:
        raise ProblemError(f"{origin}: no variables declared")
    for n in names:
        if not _NAME.match(n):
            raise ProblemError(f"{origin}: invalid variable name {n!r}")
    if len(set(names)) != len(names):
        raise ProblemError(f"{origin}: duplicate variable names")


def _check_characteristic(p, origin):
    try:
        FieldSpec(int(p))
    except (TypeError, ValueError) as exc:
        raise ProblemError(f"{origin}: bad characteristic {p!r}: {exc}") from exc
    return int(p)


def _check_options(opts, origin):
    for k in opts:
        if k not in _OPTION_KEYS:
            raise ProblemError(f"{origin}: unknown option {k!r}")
    if "degree_cap" in opts:
        try:
            opts["degree_cap"] = int(opts["degree_cap"])
        except (TypeError, ValueError):
            raise ProblemError(f"{origin}: degree_cap must be an integer") from None
    if "order" in opts and opts["order"] not in ("grevlex", "lex"):
        raise ProblemError(f"{origin}: order must be grevlex or lex")
    return opts


def parse_text(text: str, origin: str = "<string>") -> Problem:
    headers = {}
    section = None
    sections = {"ideal": [], "map": [], "options": {}}
    primes = []
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{origin}:{lineno}:1"
        if line.startswith("["):
            m = re.fullmatch(r"\[\s*([a-z_]+)\s*\]", line)
            if not m or m.group(1) not in _SECTIONS:
                raise ProblemError(f"{where}: unknown section {line}")
            section = m.group(1)
            if section == "prime":
                primes.append([])
            continue
        if section is None:
            key, sep, value = line.partition(":")
            if not sep:
                raise ProblemError(f"{where}: expected 'key: value' header")
            key = key.strip().lower()
            if key not in ("characteristic", "variables"):
                raise ProblemError(f"{where}: unknown header {key!r}")
            headers[key] = value.strip()
        elif section == "options":
            key, sep, value = line.partition(":")
            if not sep:
                raise ProblemError(f"{where}: expected 'key: value' option")
            sections["options"][key.strip()] = value.strip()
        elif section == "prime":
            primes[-1].append(line)
            lines[("prime", len(primes) - 1)] = lineno
        else:
            lines[(section, len(sections[section]))] = lineno
            sections[section].append(line)
    if "variables" not in headers:
        raise ProblemError(f"{origin}: missing 'variables:' header")
    names = _split_list(headers["variables"])
    _check_names(names, origin)
    p = _check_characteristic(headers.get("characteristic", DEFAULT_CHARACTERISTIC), origin)
    if not sections["map"]:
        raise ProblemError(f"{origin}: the [map] section is empty")
    return Problem(p, names, sections["ideal"], sections["map"], primes,
                   _check_options(sections["options"], origin), origin, lines)


def parse_json(text: str, origin: str = "<string>") -> Problem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ProblemError(f"{origin}: top level must be an object")
    unknown = set(data) - {"characteristic", "source_vars", "ideal", "map", "minimal_primes",
                           "options"}
    if unknown:
        raise ProblemError(f"{origin}: unknown keys {sorted(unknown)}")
    names = data.get("source_vars")
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise ProblemError(f"{origin}: source_vars must be a list of names")
    _check_names(names, origin)
    p = _check_characteristic(data.get("characteristic", DEFAULT_CHARACTERISTIC), origin)

    def strings(key, default=()):
        v = data.get(key, list(default))
        if not isinstance(v, list) or not all(isinstance(s, str) for s in v):
            raise ProblemError(f"{origin}: {key} must be a list of strings")
        return v

    fmap = strings("map")
    if not fmap:
        raise ProblemError(f"{origin}: map must be nonempty")
    primes = data.get("minimal_primes", [])
    if not isinstance(primes, list) or not all(
            isinstance(P, list) and all(isinstance(s, str) for s in P) for P in primes):
        raise ProblemError(f"{origin}: minimal_primes must be a list of generator lists")
    opts = data.get("options", {})
    if not isinstance(opts, dict):
        raise ProblemError(f"{origin}: options must be an object")
    return Problem(p, names, strings("ideal"), fmap, primes, _check_options(dict(opts), origin),
                   origin)


def parse_problem(text: str, origin: str = "<string>") -> Problem:
    if text.lstrip().startswith("{"):
        return parse_json(text, origin)
    return parse_text(text, origin)


def load_problem(path) -> Problem:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ProblemError(f"{path}: {exc.strerror}") from exc
    return parse_problem(text, str(path))


def load_primes(path) -> list:
    """A primes file holds ``[prime]`` sections only (or a JSON list of lists)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ProblemError(f"{path}: {exc.strerror}") from exc
    if text.lstrip().startswith("["):
        if text.lstrip().startswith("[prime"):
            primes, cur = [], None
            for lineno, raw in enumerate(text.splitlines(), 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if line.startswith("["):
                    if line.replace(" ", "") != "[prime]":
                        raise ProblemError(f"{path}:{lineno}:1: only [prime] sections allowed")
                    cur = []
                    primes.append(cur)
                elif cur is None:
                    raise ProblemError(f"{path}:{lineno}:1: generator outside a [prime] section")
                else:
                    cur.append(line)
            return primes
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ProblemError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        if not all(isinstance(P, list) and all(isinstance(s, str) for s in P) for P in data):
            raise ProblemError(f"{path}: expected a list of generator lists")
        return data
    raise ProblemError(f"{path}: expected [prime] sections or a JSON list")


def format_problem(prob: Problem) -> str:
    """Inverse of :func:`parse_text`."""
    out = [f"characteristic: {prob.characteristic}",
           f"variables: {', '.join(prob.source_vars)}", "[ideal]"]
    out += prob.ideal
    out.append("[map]")
    out += prob.map
    for P in prob.minimal_primes:
        out.append("[prime]")
        out += P
    if prob.options:
        out.append("[options]")
        out += [f"{k}: {v}" for k, v in prob.options.items()]
    return "\n".join(out) + "\n"
