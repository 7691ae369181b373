#!/usr/bin/env python3
"""Analyse every desk fixture and print a one-line summary per map.

    python3 scripts/run_fixtures.py [--field P] [--json]
"""

import argparse
import json
import time

from biratcheck.fixtures import FIXTURES, fixture
from biratcheck.jdual import decide_birational
from biratcheck.rees import phi1, sgd


def summarize(name, p):
    f = fixture(name, p).datum()
    t0 = time.perf_counter()
    rep = decide_birational(f)
    row = {
        "fixture": name,
        "verdict": rep.verdict,
        "n": rep.n,
        "jdrank": rep.jdrank,
        "dgi": rep.dgi,
        "image_dim": None if rep.image_dim == float("-inf") else int(rep.image_dim),
        "inverse_degree": rep.inverse.degree if rep.inverse is not None else None,
    }
    if f.ideal.is_zero():
        row["phi1_rank"] = phi1(f).rank
        row["sgd"] = sgd(f).value
    row["seconds"] = round(time.perf_counter() - t0, 3)
    return row


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", type=int, default=None, help="characteristic override")
    ap.add_argument("--json", action="store_true", help="one JSON object per line")
    args = ap.parse_args()
    for name in FIXTURES:
        row = summarize(name, args.field)
        if args.json:
            print(json.dumps(row))
        else:
            extras = " ".join(f"{k}={v}" for k, v in row.items() if k not in ("fixture", "verdict"))
            print(f"{name:18s} {row['verdict']:15s} {extras}")


if __name__ == "__main__":
    main()
