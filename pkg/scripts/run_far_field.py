"""Run the plane-wave far-field self-convergence studies and emit the
far-field samples (angle, re, im) for plotting.

Usage: python3 scripts/run_far_field.py [outdir]
"""

import sys

from biharmbem.cli import main

PRESETS = ("table3", "table6")


def run(outroot="results"):
    for preset in PRESETS:
        code = main(["solve", "--preset", preset, "--out", f"{outroot}/{preset}"])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(run(*sys.argv[1:]))
