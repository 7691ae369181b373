#!/usr/bin/env python3
"""Rerun the fixtures over several characteristics and compare verdict and jdrank."""

import argparse
import sys

from biratcheck.fixtures import FIXTURES, fixture
from biratcheck.jdual import jdrank


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", default="32003,2,3,5,0",
                    help="comma separated characteristics; the first is the reference")
    args = ap.parse_args()
    fields = [int(x) for x in args.fields.split(",")]
    mismatches = 0
    print(f"{'fixture':18s} " + " ".join(f"{'F' + str(p) if p else 'QQ':>9s}" for p in fields))
    for name in FIXTURES:
        cells = []
        for p in fields:
            rep = jdrank(fixture(name, p).datum())
            cells.append((rep.verdict, rep.jdrank))
        same = all(c == cells[0] for c in cells)
        mismatches += not same
        shown = " ".join(f"{v[:3] + '/' + str(r):>9s}" for v, r in cells)
        print(f"{name:18s} {shown}{'' if same else '  <- differs'}")
    sys.exit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
