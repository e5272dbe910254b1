"""Configuration-driven harness for convergence sweeps and far-field studies.

A run is described by a flat JSON config (or a named preset) and produces a
per-n report: manufactured point-source runs measure L2 field errors against
the exact solution on a circle; plane-wave runs measure far-field errors
against a finer reference discretization.

Exit codes: 0 success, 2 configuration error, 3 solver failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import pathlib
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import specfun as sf
from .assembly import FORMULATIONS, PlaneWave, PointSource, assemble, solve
from .geometry import CURVE_KINDS, BoundaryCurve, collocation_nodes
from .postfield import circle_points, eval_fields, far_field, l2_error_on_circle


class ConfigError(ValueError):
    pass


class SolverFailure(RuntimeError):
    def __init__(self, n, cause):
        super().__init__(f"solver failed at n = {n}: {cause}")
        self.n = n


@dataclass
class RunConfig:
    curve: str = "apple"
    radius: float = 1.0
    graded_p: Optional[float] = None
    formulation: str = "DoubleSingle_A1"
    kappa: float = 2.0
    incident: str = "point"
    theta: float = np.pi / 6
    source: Tuple[float, float] = (0.1, 0.2)
    sweep: Tuple[int, ...] = (8, 16, 32, 64)
    reference_n: Optional[int] = None
    error_radius: float = 1.0
    error_samples: int = 256
    angle_count: int = 32
    out: str = "."
    emit_farfield: bool = False

    def validate(self):
        if self.curve not in CURVE_KINDS or self.curve == "custom":
            raise ConfigError(f"unknown curve {self.curve!r}")
        if self.formulation not in FORMULATIONS:
            raise ConfigError(f"unknown formulation {self.formulation!r}")
        if self.incident not in ("point", "plane"):
            raise ConfigError("incident must be 'point' or 'plane'")
        if not (self.kappa > 0):
            raise ConfigError("kappa must be positive")
        if not self.sweep:
            raise ConfigError("sweep must not be empty")
        if any(n < 4 for n in self.sweep):
            raise ConfigError("every n in the sweep must be >= 4")
        if self.incident == "plane":
            if self.reference_n is None:
                raise ConfigError("plane-wave runs need reference_n")
            if self.reference_n <= max(self.sweep):
                raise ConfigError("reference_n must exceed every n in the sweep")
        if self.error_samples < 64:
            raise ConfigError("error_samples must be >= 64")
        if self.graded_p is not None and self.graded_p < 2:
            raise ConfigError("graded_p must be >= 2")
        return self

    def boundary(self) -> BoundaryCurve:
        return BoundaryCurve(self.curve, radius=self.radius, graded_p=self.graded_p)

    def incident_field(self):
        if self.incident == "plane":
            return PlaneWave(kappa=self.kappa, theta=self.theta)
        return PointSource(kappa=self.kappa, source=tuple(self.source))


@dataclass
class ReportRow:
    n: int
    errH: Optional[float]
    errM: Optional[float]
    errFar: Optional[float]
    assembly_s: float
    solve_s: float
    cond: float


@dataclass
class SolveReport:
    rows: List[ReportRow] = field(default_factory=list)
    farfields: dict = field(default_factory=dict)


CSV_HEADER = "n,errH,errM,errFar,assembly_s,solve_s,cond"


# named presets mirroring the benchmark studies; reference sizes are scaled
# to desk runtimes
PRESETS = {
    "table2": dict(curve="apple", formulation="DoubleSingle_A1", incident="point",
                   sweep=(8, 16, 32, 64, 128)),
    "table2-peanut": dict(curve="peanut", formulation="DoubleSingle_A1", incident="point",
                          sweep=(8, 16, 32, 64, 128)),
    "table3": dict(curve="apple", formulation="DoubleSingle_A1", incident="plane",
                   sweep=(8, 16, 32, 64), reference_n=512, emit_farfield=True),
    "table4": dict(curve="apple", formulation="DoubleSingle_A2", incident="point",
                   sweep=(8, 16, 32, 64, 128)),
    "table5": dict(curve="apple", formulation="SingleSingle", incident="point",
                   sweep=(8, 16, 32, 64, 128)),
    "table5-peach": dict(curve="peach", formulation="SingleSingle", incident="point",
                         sweep=(8, 16, 32, 64, 128)),
    "table6": dict(curve="apple", formulation="SingleSingle", incident="plane",
                   sweep=(8, 16, 32, 64), reference_n=512, emit_farfield=True),
    "table7": dict(curve="heart", graded_p=2.0, formulation="SingleSingle", incident="point",
                   source=(-0.5, 0.2), error_radius=2.0, sweep=(32, 64, 128, 256)),
    "table7-drop": dict(curve="drop", graded_p=2.0, formulation="SingleSingle", incident="point",
                        source=(0.1, 0.2), error_radius=2.0, sweep=(32, 64, 128, 256)),
}


def _exact_fields(config: RunConfig, points):
    src = np.asarray(config.source, dtype=float)
    r = np.sqrt(((points - src) ** 2).sum(axis=1))
    vh = sf.hankel1(0, config.kappa * r)
    vm = (-2j / np.pi) * sf.bessel_k0(config.kappa * r)
    return vh, vm


def _solve_at(config: RunConfig, n: int):
    curve = config.boundary()
    grid = collocation_nodes(n, shifted=curve.graded)
    t0 = time.monotonic()
    system = assemble(config.formulation, curve, grid, config.kappa, incident=config.incident_field())
    t1 = time.monotonic()
    try:
        densities = solve(system)
    except Exception as exc:
        raise SolverFailure(n, exc) from exc
    t2 = time.monotonic()
    return curve, grid, densities, t1 - t0, t2 - t1


def run_convergence(config: RunConfig) -> SolveReport:
    config.validate()
    report = SolveReport()
    angles = 2.0 * np.pi * np.arange(config.angle_count) / config.angle_count
    farfields = {}
    if config.incident == "plane":
        curve, grid, dens, _, _ = _solve_at(config, config.reference_n)
        ref = far_field(dens, config.formulation, curve, grid, config.kappa, angles).values
    else:
        pts = circle_points(config.error_radius, config.error_samples)
        eh, em = _exact_fields(config, pts)
    for n in sorted(config.sweep):
        curve, grid, dens, ta, ts = _solve_at(config, n)
        errh = errm = errf = None
        if config.incident == "plane":
            ff = far_field(dens, config.formulation, curve, grid, config.kappa, angles)
            farfields[n] = ff
            errf = float(
                np.sqrt((2.0 * np.pi / config.angle_count) * (np.abs(ff.values - ref) ** 2).sum())
            )
        else:
            vh, vm = eval_fields(dens, config.formulation, curve, grid, config.kappa, pts)
            errh = l2_error_on_circle(vh, eh, config.error_radius, config.error_samples)
            errm = l2_error_on_circle(vm, em, config.error_radius, config.error_samples)
        report.rows.append(
            ReportRow(n=n, errH=errh, errM=errm, errFar=errf,
                      assembly_s=ta, solve_s=ts, cond=dens.condition)
        )
    report.farfields = dict(farfields)
    return report


def _fmt(x, timing=False):
    if x is None:
        return ""
    return f"{x:.3f}" if timing else f"{x:.6e}"


def emit_report(report: SolveReport, fmt: str, path):
    if not report.rows:
        raise ValueError("cannot emit an empty report")
    path = pathlib.Path(path)
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER.split(","))
            for r in report.rows:
                w.writerow([r.n, _fmt(r.errH), _fmt(r.errM), _fmt(r.errFar),
                            _fmt(r.assembly_s, True), _fmt(r.solve_s, True), _fmt(r.cond)])
    elif fmt == "json":
        with open(path, "w") as fh:
            json.dump({"rows": [dataclasses.asdict(r) for r in report.rows]}, fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError("format must be 'csv' or 'json'")


def report_from_json(path) -> SolveReport:
    with open(path) as fh:
        data = json.load(fh)
    return SolveReport(rows=[ReportRow(**row) for row in data["rows"]])


def emit_farfield(ff, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["angle", "re", "im"])
        for a, v in zip(ff.angles, ff.values):
            w.writerow([f"{a:.12e}", f"{v.real:.12e}", f"{v.imag:.12e}"])


def load_config(path=None, overrides=None) -> RunConfig:
    data = {}
    if path is not None:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
    data.update(overrides or {})
    preset = data.pop("preset", None)
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError(f"unknown preset {preset!r}")
        merged = dict(PRESETS[preset])
        merged.update(data)
        data = merged
    known = {f.name for f in dataclasses.fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "sweep" in data:
        data["sweep"] = tuple(int(v) for v in data["sweep"])
    if "source" in data:
        data["source"] = tuple(float(v) for v in data["source"])
    return RunConfig(**data).validate()


def _parse_args(argv):
    parser = argparse.ArgumentParser(prog="biharmbem",
                                     description="Flexural-wave cavity scattering solver")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("solve", help="run a convergence sweep")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--preset", choices=sorted(PRESETS), help="named benchmark preset")
    p.add_argument("--curve", help="boundary curve kind")
    p.add_argument("--formulation", help="formulation tag")
    p.add_argument("--kappa", type=float)
    p.add_argument("--sweep", help="comma-separated n values, e.g. 8,16,32")
    p.add_argument("--out", help="output directory")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = _parse_args(argv)
    overrides = {}
    if args.preset:
        overrides["preset"] = args.preset
    for key in ("curve", "formulation", "kappa", "out"):
        val = getattr(args, key)
        if val is not None:
            overrides[key] = val
    if args.sweep:
        try:
            overrides["sweep"] = tuple(int(v) for v in args.sweep.split(","))
        except ValueError:
            print("error: --sweep must be comma-separated integers", file=sys.stderr)
            return 2
    try:
        config = load_config(args.config, overrides)
    except (ConfigError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    outdir = pathlib.Path(config.out)
    outdir.mkdir(parents=True, exist_ok=True)
    try:
        report = run_convergence(config)
    except SolverFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    emit_report(report, "csv", outdir / "report.csv")
    emit_report(report, "json", outdir / "report.json")
    if config.emit_farfield:
        for n, ff in report.farfields.items():
            emit_farfield(ff, outdir / f"farfield_n{n}.csv")
    for r in report.rows:
        cols = [str(r.n), _fmt(r.errH), _fmt(r.errM), _fmt(r.errFar)]
        print("\t".join(cols))
    return 0


if __name__ == "__main__":
    sys.exit(main())
