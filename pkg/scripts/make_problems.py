#!/usr/bin/env python3
"""Write the fixture problem files into problems/ (text form, plus one JSON copy)."""

import json
from pathlib import Path

from biratcheck.fixtures import FIXTURES, INVERSES
from biratcheck.problem import format_problem

OUT = Path(__file__).resolve().parents[1] / "problems"


def main():
    OUT.mkdir(exist_ok=True)
    for name, prob in FIXTURES.items():
        (OUT / f"{name}.txt").write_text(format_problem(prob))
    for name, prob in INVERSES.items():
        (OUT / f"{name}_inverse.txt").write_text(format_problem(prob))
    cre = FIXTURES["plane_cremona"]
    (OUT / "plane_cremona.json").write_text(json.dumps(cre.echo(), indent=2) + "\n")
    print(f"wrote {len(FIXTURES) + len(INVERSES) + 1} files to {OUT}")


if __name__ == "__main__":
    main()
