"""Run the graded-mesh corner-cavity benchmarks (heart and drop boundaries,
two-single-layer formulation, clustering exponent p = 2).

Usage: python3 scripts/run_corner_tables.py [outdir]
"""

import sys

from biharmbem.cli import main

PRESETS = ("table7", "table7-drop")


def run(outroot="results"):
    for preset in PRESETS:
        code = main(["solve", "--preset", preset, "--out", f"{outroot}/{preset}"])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(run(*sys.argv[1:]))
