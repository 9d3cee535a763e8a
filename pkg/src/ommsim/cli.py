"""Command-line front end.

Subcommands: steady, stability, response, fwm, sweep, coupling, verify.
All artifacts land in --out-dir; a provenance.json sidecar carries the
timestamp and the echoed effective config so the main outputs stay
byte-identical across reruns.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys

from . import __version__, presets
from .corrections import SUBCOMMAND_CORRECTIONS, ensure_ledger_lines
from .coupling import MaterialParams, coupling_report, read_mode_files
from .errors import ConfigError, OmmsimError
from .params import PhysicalDrive, normalize_drive, split_config
from .response import spectrum, write_spectrum_csv
from .stability import assess_stability, drift_matrix
from .steady import default_steady_state, effective_couplings, effective_state, solve_steady_state
from .sweep import SweepAxis, SweepSpec, run_sweep, write_outputs
from .verify import compare

VERIFY_TOL = 1e-10

SUBCOMMANDS = ("steady", "stability", "response", "fwm", "sweep", "coupling", "verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ommsim",
        description="steady states, probe spectra and four-wave mixing of a driven "
        "cavity-magnon-mechanics model",
    )
    parser.add_argument("--version", action="version", version=f"ommsim {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="JSON config document")
        p.add_argument("--out-dir", default=".", help="output directory")
        p.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override a config entry (dotted path; bare keys address params.*)",
        )
        p.add_argument("--grid", type=int, default=None, help="number of probe detunings")
        p.add_argument("--mode", choices=("fixed-effective", "fixed-bare"), default=None)
        p.add_argument(
            "--ledger",
            default="deviations.md",
            help="path of the corrections ledger appended by ledger-relevant runs",
        )
    return parser


TOP_LEVEL_KEYS = ("delta_range", "grid", "mode")


def _apply_override(cfg: dict, item: str) -> None:
    if "=" not in item:
        raise ConfigError(f"override {item!r} is not KEY=VALUE")
    key, raw = item.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    if "." in key:
        path = key.split(".")
    elif key in TOP_LEVEL_KEYS:
        path = [key]
    else:
        path = ["params", key]
    node = cfg
    for part in path[:-1]:
        node = node.setdefault(part, {})
        if not isinstance(node, dict):
            raise ConfigError(f"override path {key!r} crosses a non-object entry")
    node[path[-1]] = value


def load_config(path: str, overrides) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path}: line {exc.lineno}, col {exc.colno}: {exc.msg}") from None
    if not isinstance(cfg, dict):
        raise ConfigError("config document must be a JSON object")
    for item in overrides:
        _apply_override(cfg, item)
    return cfg


def _working_point(cfg: dict, mode: str):
    params, eff_settings = split_config(cfg.get("params", {}))
    if "physical" in cfg:
        params = normalize_drive(PhysicalDrive(**cfg["physical"]), params)
    if mode == "fixed-effective":
        ss, eff = effective_state(eff_settings)
    else:
        ss = default_steady_state(params)
        eff = effective_couplings(params, ss)
    return params, ss, eff


def _delta_grid(cfg: dict, n_grid):
    import numpy as np

    lo, hi = cfg.get("delta_range", (-2.0, 2.0))
    n = int(n_grid) if n_grid else int(cfg.get("grid", 2001))
    if not (hi > lo) or n < 2:
        raise ConfigError("delta_range must satisfy hi > lo and grid >= 2")
    return np.linspace(float(lo), float(hi), n)


def _write_json(path, payload) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _write_provenance(out_dir, subcommand, cfg) -> None:
    _write_json(
        os.path.join(out_dir, "provenance.json"),
        {
            "engine": "ommsim",
            "version": __version__,
            "command": subcommand,
            "created_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            "config": cfg,
        },
    )


def _sweep_spec(cfg: dict, n_grid) -> tuple:
    section = cfg.get("sweep")
    if not isinstance(section, dict):
        raise ConfigError("config needs a 'sweep' object for the sweep subcommand")
    workers = int(section.get("workers", 1))
    if "preset" in section:
        name = section["preset"]
        try:
            spec = presets.preset(name, n_delta=int(n_grid) if n_grid else 2001)
        except KeyError as exc:
            raise ConfigError(str(exc)) from None
        return spec, workers

    params, eff_settings = split_config(cfg.get("params", {}))

    def axis(key):
        entry = section.get(key)
        if entry is None:
            return None
        try:
            return SweepAxis(entry["name"], entry["values"])
        except KeyError as exc:
            raise ConfigError(f"sweep.{key} missing field {exc}") from None

    axis1 = axis("axis1")
    if axis1 is None:
        raise ConfigError("sweep.axis1 is required")
    grid_entry = section.get("delta_grid")
    if isinstance(grid_entry, dict):
        import numpy as np

        deltas = np.linspace(
            float(grid_entry["start"]), float(grid_entry["stop"]), int(grid_entry["num"])
        )
    elif grid_entry is not None:
        deltas = grid_entry
    else:
        deltas = _delta_grid(cfg, n_grid)
    effective = {
        "delta_c": eff_settings.delta_c,
        "delta_m": eff_settings.delta_m,
        "G_cb": eff_settings.G_cb.real,
        "G_mb": eff_settings.G_mb.real,
    }
    spec = SweepSpec(
        base=params,
        axis1=axis1,
        axis2=axis("axis2"),
        delta_grid=tuple(float(d) for d in deltas),
        quantities=tuple(section.get("quantities", ("lambda", "lambda_tilde", "fwm"))),
        sweep_mode=section.get("mode", "fixed-effective"),
        effective=effective,
    )
    return spec, workers


def run(args) -> int:
    cfg = load_config(args.config, args.overrides)
    mode = args.mode or cfg.get("mode", "fixed-effective")
    out_dir = args.out_dir
    os.makedirs(out_dir, exist_ok=True)
    sub = args.subcommand

    if sub == "steady":
        params, _ = split_config(cfg.get("params", {}))
        if "physical" in cfg:
            params = normalize_drive(PhysicalDrive(**cfg["physical"]), params)
        branches = solve_steady_state(params)
        _write_json(
            os.path.join(out_dir, "steady.json"),
            {"params": params.to_dict(), "branches": [b.to_dict() for b in branches]},
        )
    elif sub == "stability":
        params, ss, eff = _working_point(cfg, mode)
        report = assess_stability(drift_matrix(params, eff, ss.delta_c, ss.delta_m))
        _write_json(
            os.path.join(out_dir, "stability.json"),
            {"mode": mode, "report": report.to_dict()},
        )
    elif sub in ("response", "fwm"):
        params, ss, eff = _working_point(cfg, mode)
        points = spectrum(params, ss, eff, _delta_grid(cfg, args.grid))
        write_spectrum_csv(points, os.path.join(out_dir, f"{sub}.csv"))
    elif sub == "sweep":
        spec, workers = _sweep_spec(cfg, args.grid)
        result = run_sweep(spec, workers=workers)
        write_outputs(result, out_dir)
    elif sub == "coupling":
        section = cfg.get("coupling")
        if not isinstance(section, dict):
            raise ConfigError("config needs a 'coupling' object for the coupling subcommand")
        try:
            grid = read_mode_files(section["mode_csv"], section["sidecar"])
            material = MaterialParams(**section["material"])
        except KeyError as exc:
            raise ConfigError(f"coupling section missing field {exc}") from None
        except TypeError as exc:
            raise ConfigError(f"coupling.material: {exc}") from None
        _write_json(os.path.join(out_dir, "coupling.json"), coupling_report(grid, material))
    elif sub == "verify":
        params, ss, eff = _working_point(cfg, mode)
        report = compare(params, ss, eff, _delta_grid(cfg, args.grid))
        _write_json(os.path.join(out_dir, "oracle_report.json"), report.to_dict())
        _write_provenance(out_dir, sub, cfg)
        _ledger(args, sub)
        if report.max_rel > VERIFY_TOL:
            print(
                f"verify: max relative discrepancy {report.max_rel:.3e} exceeds {VERIFY_TOL:.0e}",
                file=sys.stderr,
            )
            return 1
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise ConfigError(f"unknown subcommand {sub!r}")

    _write_provenance(out_dir, sub, cfg)
    _ledger(args, sub)
    return 0


def _ledger(args, sub) -> None:
    keys = SUBCOMMAND_CORRECTIONS.get(sub, ())
    if keys:
        ensure_ledger_lines(args.ledger, keys)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args)
    except ConfigError as exc:
        print(f"ommsim: config error: {exc}", file=sys.stderr)
        return 2
    except OmmsimError as exc:
        print(f"ommsim: numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
