"""Analyses behind each CLI command and deterministic report serialization."""

from __future__ import annotations

import json
import math
import time
from contextlib import contextmanager

from .config import AnalysisConfig
from .jdual import (
    BIRATIONAL,
    INDETERMINATE,
    decide_birational,
    jacobian_dual,
    jdrank,
    linear_rank_test,
    semilinear_height_test,
    verify_inverse,
)
from .problem import Problem
from .ratmap import compose, fresh_target_names, image, restrict
from .rees import phi1, rees_ideal, sgd

COMMANDS = ("image", "jdrank", "check-birational", "inverse", "linear-rank", "sgd", "compose",
            "verify-inverse", "restrict")
TWO_FILE_COMMANDS = ("compose", "verify-inverse")


class _Clock:
    def __init__(self):
        self.phases = {}

    @contextmanager
    def phase(self, name):
        t0 = time.perf_counter()
        yield
        self.phases[name] = self.phases.get(name, 0.0) + time.perf_counter() - t0


def _dim(x):
    if x is None or (isinstance(x, float) and math.isinf(x)):
        return None
    return int(x)


def _forms(polys) -> list:
    return [str(p) for p in polys]


def _generators(ideal) -> list:
    return [] if ideal.is_zero() else _forms(ideal.groebner())


def _load(prob: Problem, cfg: AnalysisConfig, primes=None, target_names=None):
    return prob.datum(cfg.order, target_names=target_names, primes=primes)


def run(command: str, problems: list, cfg: AnalysisConfig, primes: list | None = None) -> dict:
    """Run one command; ``problems`` holds one problem (two for compose and
    verify-inverse, the second over the target variables of the first)."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    clock = _Clock()
    prob = problems[0]
    cfg = cfg.merged(prob.options)
    with clock.phase("validate"):
        f = _load(prob, cfg, primes)
    out = {"command": command, "input": prob.echo()}
    if primes is not None:
        out["input"]["minimal_primes"] = [list(P) for P in primes]
    warnings = list(f.validity.warnings)

    if command == "image":
        with clock.phase("image"):
            im = image(f)
        out["image"] = {"generators": _generators(im.ideal), "dim": _dim(im.dimension.krull_dim)}

    elif command in ("jdrank", "check-birational", "inverse"):
        with clock.phase("rees"):
            J = rees_ideal(f)
        with clock.phase("jacobian_dual"):
            jd = jacobian_dual(f, J)
        if command == "jdrank":
            with clock.phase("rank"):
                rep = jdrank(f, jd)
        else:
            with clock.phase("decide"):
                rep = decide_birational(f, cfg.degree_cap, jd)
        warnings = _merge(warnings, rep.warnings)
        out["verdict"] = rep.verdict
        if command != "inverse":
            out.update({
                "n": rep.n,
                "jdrank": rep.jdrank,
                "jdrank_plus": rep.jdrank_plus,
                "dgi": rep.dgi,
                "edim": rep.edim,
            })
            if rep.verdict == INDETERMINATE or command == "jdrank":
                out["naive_rank"] = rep.naive_rank
            out["psi"] = [_forms(row) for row in jd.psi]
            out["rank_certificate"] = {"vanish": rep.rank.vanish_certificate,
                                       "regular": rep.rank.regular_certificate}
            out["source_dim"] = _dim(rep.source_dim)
            out["image"] = {"generators": _generators(jd.b), "dim": _dim(rep.image_dim)}
        if command in ("check-birational", "inverse"):
            out.update(_inverse_fields(rep))
        if command == "check-birational":
            with clock.phase("sufficient_tests"):
                ph = phi1(f)
                lin = linear_rank_test(f, image_dim=rep.image_dim)
                sh = semilinear_height_test(f, J)
                sg = sgd(f, J)
            out["phi1_rank"] = ph.rank
            out["tests"] = {
                "linear_rank": {"fires": lin.fires, **lin.detail},
                "semilinear_height": {"fires": sh.fires, **{k: _dim(v) for k, v in sh.detail.items()}},
            }
            out["sgd"] = sg.as_dict()
            out["condition_i"] = f.validity.condition_i
            out["components"] = rep.components
            out["diagnostics"] = rep.diagnostics

    elif command == "linear-rank":
        with clock.phase("linear_rank"):
            lin = linear_rank_test(f)
        out["linear_rank"] = {"fires": lin.fires, **lin.detail}

    elif command == "sgd":
        with clock.phase("rees"):
            J = rees_ideal(f)
        with clock.phase("sgd"):
            sg = sgd(f, J)
        out["sgd"] = sg.as_dict()
        out["slice1_bidegrees"] = [list(J.bidegree(h)) for h in J.slice1]

    elif command in TWO_FILE_COMMANDS:
        if len(problems) != 2:
            raise ValueError(f"{command} needs two problem files")
        gprob = problems[1]
        names = fresh_target_names(gprob.source_vars, len(gprob.map), prob.source_vars)
        with clock.phase("validate"):
            g = gprob.datum(cfg.order, target_names=names)
        warnings = _merge(warnings, g.validity.warnings)
        out["input_g"] = gprob.echo()
        with clock.phase("image"):
            b = image(f).ideal
        if command == "compose":
            with clock.phase("compose"):
                h = compose(g, f, image_ideal=b)
            out["composite"] = _forms(h.forms)
            out["degree"] = h.degree
        else:
            with clock.phase("verify"):
                out["verified"] = verify_inverse(f, g, b)

    elif command == "restrict":
        plist = primes if primes is not None else prob.minimal_primes
        if not plist:
            raise ValueError("restrict needs minimal primes ([prime] sections or --primes)")
        ring = f.ring
        rows = []
        with clock.phase("restrict"):
            for gens in plist:
                P = prob._parse_ideal(ring, gens)
                h = restrict(f, P)
                rows.append({"prime": list(gens), "forms": _forms(h.forms), "degree": h.degree})
        out["restrictions"] = rows
        warnings = _merge(warnings, ["supplied minimal primes trusted to be prime"])

    out["warnings"] = warnings
    if cfg.timings:
        out["timings"] = {k: round(v, 4) for k, v in clock.phases.items()}
    return out


def _merge(a, b):
    return a + [w for w in b if w not in a]


def _inverse_fields(rep) -> dict:
    inv = rep.inverse
    return {
        "inverse": None if inv is None else _forms(inv.forms),
        "inverse_degree": None if inv is None else inv.degree,
        "inverse_verified": rep.inverse_verified,
    }


def is_indeterminate(report: dict) -> bool:
    return report.get("verdict") == INDETERMINATE


# -- printing ---------------------------------------------------------------


def print_report(report: dict, fmt: str = "json") -> str:
    """JSON: one object, keys in construction order.  Text: one ``key: value``
    line per top-level field with the value JSON-encoded, so it parses back."""
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if fmt == "text":
        lines = [f"{k}: {json.dumps(v, ensure_ascii=False)}" for k, v in report.items()]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str, fmt: str = "json") -> dict:
    if fmt == "json":
        return json.loads(text)
    out = {}
    for line in text.splitlines():
        if line.strip():
            key, _, value = line.partition(": ")
            out[key] = json.loads(value)
    return out


__all__ = ["COMMANDS", "run", "print_report", "parse_report", "is_indeterminate", "BIRATIONAL"]
