"""Desk fixtures used by the tests, the scripts and the shipped problem files."""

from __future__ import annotations

from .config import DEFAULT_CHARACTERISTIC
from .problem import Problem, format_problem


def _problem(names, forms, ideal=(), primes=(), p=DEFAULT_CHARACTERISTIC) -> Problem:
    return Problem(p, list(names), list(ideal), list(forms), [list(P) for P in primes])


def identity(n: int, p: int = DEFAULT_CHARACTERISTIC) -> Problem:
    names = [f"X{i}" for i in range(n + 1)]
    return _problem(names, names, p=p)


FIXTURES = {
    # quartic Cremona map of P^3 with rk phi_1 = 1
    "p3_quartic": _problem("XYZW", ["X^4", "X^2*Y*W", "X*Y^2*Z", "Y^3*Z"]),
    # cubic monomial Cremona map of P^5
    "p5_cubic": _problem([f"X{i}" for i in range(6)],
                         ["X0*X1*X2", "X0*X2*X3", "X0*X4*X5", "X1*X2*X4", "X2*X3*X5",
                          "X3*X4*X5"]),
    "plane_cremona": _problem(["X0", "X1", "X2"], ["X1*X2", "X0*X2", "X0*X1"]),
    "segre": _problem(["X0", "X1", "X2", "X3"], ["X0*X2", "X0*X3", "X1*X2", "X1*X3"]),
    "identity_p1": identity(1),
    "identity_p2": identity(2),
    "identity_p3": identity(3),
    "identity_p4": identity(4),
    # non-Cremona and degenerate cases
    "conic": _problem(["X0", "X1"], ["X0^2", "X0*X1", "X1^2"]),
    "line_in_plane": _problem(["X0", "X1", "X2"], ["X1", "X2"], ideal=["X0"],
                              primes=[["X0"]]),
    "two_lines": _problem(["X0", "X1", "X2"], ["X0 + X1", "X2"], ideal=["X0*X1"],
                          primes=[["X0"], ["X1"]]),
    "skew_lines_mixed": _problem(["X0", "X1", "X2", "X3"],
                                 ["X0^2", "X0*X1", "X1^2", "X2^2", "X3^2"],
                                 ideal=["X0*X2", "X0*X3", "X1*X2", "X1*X3"],
                                 primes=[["X0", "X1"], ["X2", "X3"]]),
}

# inverses over the target ring (used by compose / verify-inverse files)
INVERSES = {
    "plane_cremona": _problem(["Y0", "Y1", "Y2"], ["Y1*Y2", "Y0*Y2", "Y0*Y1"]),
}


def fixture(name: str, p: int | None = None) -> Problem:
    prob = FIXTURES[name]
    if p is None:
        p = prob.characteristic
    return Problem(p, list(prob.source_vars), list(prob.ideal), list(prob.map),
                   [list(P) for P in prob.minimal_primes], dict(prob.options))


def problem_text(name: str) -> str:
    return format_problem(FIXTURES[name])
