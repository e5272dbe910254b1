"""Run the manufactured-solution convergence benchmarks for all smooth-cavity
formulations and write one report directory per preset.

Usage: python3 scripts/run_convergence_tables.py [outdir]
"""

import sys

from biharmbem.cli import main

PRESETS = ("table2", "table2-peanut", "table4", "table5", "table5-peach")


def run(outroot="results"):
    for preset in PRESETS:
        code = main(["solve", "--preset", preset, "--out", f"{outroot}/{preset}"])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(run(*sys.argv[1:]))
