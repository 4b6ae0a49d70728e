"""Command-line front end: catalog listing, spectra, wavefunctions,
invariant verification, PDM rows, and the uniform-field reductions.

A run is configured by flags, by a JSON document (--config), or both;
flags override file values.  Batch documents hold a "runs" list whose
entries are executed concurrently up to the SUSYSPEC_WORKERS cap, each
writing its own output file.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
3 normalizability gate rejection (the message names the violated
inequality), 4 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import math
import os
import sys

import numpy as np

from .catalog import ParamSet, ParameterError, catalog_dump, get_kind, instance
from .engine import (
    GateRejection,
    KernelSearchError,
    LadderProblem,
    default_grid,
    energy_levels,
    excited_state,
    verify_kind,
)
from .numkit import EigenConvergenceError, Grid, eig_banded
from .pauli import landau_reduction
from .pdm import pdm_spectrum

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_GATE_REJECTED = 3
EXIT_NO_CONVERGENCE = 4

_PARAM_FLAGS = ("nu", "mu", "omega", "lam", "kappa", "c", "c1", "c2", "r2", "r3",
                "mu1", "mu2", "mu3", "alpha")


def _fmt17(x: float) -> float:
    return float(f"{x:.17g}")


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _params_from(cfg: dict) -> ParamSet:
    fields = {k: float(v) for k, v in cfg.get("params", {}).items()}
    unknown = set(fields) - set(_PARAM_FLAGS)
    if unknown:
        raise ConfigError(f"unknown parameters {sorted(unknown)}")
    if "lambda" in cfg.get("params", {}):
        fields["lam"] = float(cfg["params"]["lambda"])
    return ParamSet(**fields)


class ConfigError(ValueError):
    pass


def _grid_from(cfg: dict, w=None) -> Grid | None:
    g = cfg.get("grid")
    if not g:
        return None
    length = float(g["L"])
    m = int(g["m"])
    return Grid.half_line(length, m) if w is None else _domain_grid(w, length, m)


def _domain_grid(w, length: float, m: int) -> Grid:
    dom = w.domain
    if math.isfinite(dom.lo) and math.isfinite(dom.hi):
        h = (dom.hi - dom.lo) / (m + 1)
        return Grid(dom.lo + h, h, m)
    if math.isfinite(dom.lo):
        h = length / (m + 1)
        return Grid(dom.lo + h, h, m)
    h = 2.0 * length / (m + 1)
    return Grid(-length + h, h, m)


def _run_catalog(cfg: dict) -> int:
    doc = json.dumps(catalog_dump(), indent=2)
    _write_output(doc + "\n", cfg.get("output", {}).get("path"))
    return EXIT_OK


def _run_spectrum(cfg: dict) -> int:
    name = cfg.get("problem")
    if not name:
        raise ConfigError("spectrum requires a problem name")
    w = instance(name, _params_from(cfg))
    grid = _grid_from(cfg, w)
    table = energy_levels(w, int(cfg.get("n_max", 3)), grid=grid)
    fmt = cfg.get("output", {}).get("format", "csv")
    text = table.to_csv() if fmt == "csv" else table.to_json()
    _write_output(text, cfg.get("output", {}).get("path"))
    return EXIT_OK


def _run_wavefunction(cfg: dict) -> int:
    name = cfg.get("problem")
    if not name:
        raise ConfigError("wavefunction requires a problem name")
    w = instance(name, _params_from(cfg))
    n = int(cfg.get("n", 0))
    grid = _grid_from(cfg, w) or default_grid(w, n)
    problem = LadderProblem(w, grid, n_max=max(n, 1))
    state = excited_state(problem, n)
    fmt = cfg.get("output", {}).get("format", "csv")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x"] + [f"component{i}" for i in range(w.dim)])
        for xj, row in zip(grid.nodes, state.samples):
            writer.writerow([f"{xj:.12g}"] + [f"{float(np.real(v)):.12g}" for v in row])
        text = buf.getvalue()
    else:
        text = json.dumps(
            {
                "problem": name,
                "n": n,
                "energy": _fmt17(state.energy),
                "provenance": state.provenance,
                "x": [_fmt17(v) for v in grid.nodes],
                "components": [
                    [_fmt17(float(np.real(v))) for v in state.samples[:, i]]
                    for i in range(w.dim)
                ],
            },
            indent=2,
        )
    _write_output(text, cfg.get("output", {}).get("path"))
    return EXIT_OK


def _run_verify(cfg: dict) -> int:
    name = cfg.get("problem")
    if not name:
        raise ConfigError("verify requires a problem name")
    params = _params_from(cfg) if cfg.get("params") else None
    checks = verify_kind(name, params)
    doc = {
        "problem": name,
        "checks": [c.as_dict() for c in checks],
        "passed": all(c.passed for c in checks),
    }
    _write_output(json.dumps(doc, indent=2) + "\n", cfg.get("output", {}).get("path"))
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        print(f"{status} {name} {c.name}: {c.residual:.3e} (tol {c.tolerance:.0e})",
              file=sys.stderr)
    return EXIT_OK if doc["passed"] else EXIT_VERIFY_FAILED


def _run_pdm(cfg: dict) -> int:
    row = cfg.get("row")
    if not row:
        raise ConfigError("pdm requires a row id (t1.1 .. t2.10)")
    params = cfg.get("params", {})
    table = pdm_spectrum(
        row,
        l=int(cfg.get("l", 0)),
        n_max=int(cfg.get("n_max", 2)),
        alpha=float(params.get("alpha", 1.0)),
        nu=float(params.get("nu", 0.0)),
        route=cfg.get("route"),
    )
    fmt = cfg.get("output", {}).get("format", "csv")
    text = table.to_csv() if fmt == "csv" else table.to_json()
    _write_output(text, cfg.get("output", {}).get("path"))
    return EXIT_OK


def _run_landau(cfg: dict) -> int:
    params = cfg.get("params", {})
    omega = float(params.get("omega", 1.0))
    sector = cfg.get("sector", "cartesian")
    red = landau_reduction(omega, sector=sector, index=int(cfg.get("l", 1)))
    g = cfg.get("grid", {"L": 12.0, "m": 2400})
    length, m = float(g["L"]), int(g["m"])
    grid = (
        Grid.symmetric(length, m) if sector == "cartesian" else Grid.half_line(length, m)
    )
    k = int(cfg.get("n_max", 5)) + 1
    res = eig_banded(red.block_operator(grid), 2 * k)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "E"])
    for i, e in enumerate(res.eigenvalues):
        writer.writerow([i, f"{e:.12g}"])
    _write_output(buf.getvalue(), cfg.get("output", {}).get("path"))
    return EXIT_OK


_COMMANDS = {
    "catalog": _run_catalog,
    "spectrum": _run_spectrum,
    "wavefunction": _run_wavefunction,
    "verify": _run_verify,
    "pdm": _run_pdm,
    "landau": _run_landau,
}


def run(config: dict) -> int:
    """Execute one validated run configuration; returns the exit code."""
    command = config.get("command")
    if command not in _COMMANDS:
        raise ConfigError(f"unknown command {command!r}")
    try:
        return _COMMANDS[command](config)
    except GateRejection as exc:
        print(f"gate rejection: {exc}", file=sys.stderr)
        return EXIT_GATE_REJECTED
    except KernelSearchError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except EigenConvergenceError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


def _run_batch(doc: dict) -> int:
    runs = doc["runs"]
    for i, entry in enumerate(runs):
        if "output" not in entry or not entry["output"].get("path"):
            raise ConfigError(f"batch run {i} needs an output path")
    workers = int(os.environ.get("SUSYSPEC_WORKERS", "4"))
    codes = []
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(workers, 1)) as pool:
        for code in pool.map(run, runs):
            codes.append(code)
    return max(codes) if codes else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susyspec",
        description="Shape-invariant SUSY quantum mechanics toolkit",
    )
    sub = parser.add_subparsers(dest="command")
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON run configuration")
        p.add_argument("--problem", help="catalog kind, e.g. matrix2.inverse")
        p.add_argument("--row", help="PDM row id, e.g. t2.10")
        p.add_argument("--sector", choices=["cartesian", "radial"])
        p.add_argument("--route", choices=["direct", "two-step"])
        p.add_argument("--n", type=int, help="state index for wavefunction")
        p.add_argument("--n-max", type=int, dest="n_max")
        p.add_argument("--l", type=int)
        p.add_argument("--grid-L", type=float, dest="grid_L")
        p.add_argument("--grid-m", type=int, dest="grid_m")
        p.add_argument("--out", help="output path (stdout when omitted)")
        p.add_argument("--format", choices=["csv", "json"])
        for flag in _PARAM_FLAGS:
            p.add_argument(f"--{flag}", type=float)
        p.add_argument("--lambda", type=float, dest="lam_alias")
    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    cfg: dict = {}
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
    if "runs" in cfg:
        return cfg
    cfg.setdefault("command", args.command)
    for key in ("problem", "row", "sector", "route"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    for key in ("n", "n_max", "l"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    params = dict(cfg.get("params", {}))
    for flag in _PARAM_FLAGS:
        val = getattr(args, flag, None)
        if val is not None:
            params[flag] = val
    if args.lam_alias is not None:
        params["lam"] = args.lam_alias
    if params:
        cfg["params"] = params
    if args.grid_L is not None or args.grid_m is not None:
        grid = dict(cfg.get("grid", {}))
        if args.grid_L is not None:
            grid["L"] = args.grid_L
        if args.grid_m is not None:
            grid["m"] = args.grid_m
        grid.setdefault("L", 60.0)
        grid.setdefault("m", 6000)
        cfg["grid"] = grid
    output = dict(cfg.get("output", {}))
    if args.out is not None:
        output["path"] = args.out
    if args.format is not None:
        output["format"] = args.format
    if output:
        cfg["output"] = output
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_BAD_CONFIG
    try:
        cfg = _merge_config(args)
        if "runs" in cfg:
            return _run_batch(cfg)
        return run(cfg)
    except (ConfigError, ParameterError, KeyError, ValueError, OSError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
