"""Drive the `ommsim` CLI to produce the datasets the figure recipes consume.

Usage: make_figure_inputs <data_dir> [--grid N] [--presets fig5a,fig7b]

The simulator is only touched through its command-line interface: one
`ommsim sweep --config ... --out-dir <data_dir>/<preset>/` run per dataset.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import tempfile

#: dataset name -> the simulator preset that produces it
DATASETS = (
    "fig2a",
    "fig2b",
    "fig2c",
    "fig3_weak",
    "fig3_strong",
    "fig4",
    "fig5a",
    "fig5c",
    "fig6a",
    "fig6b",
    "fig7a",
    "fig7b",
)


def run_sweep_cli(preset: str, out_dir, grid: int) -> None:
    with tempfile.TemporaryDirectory() as tmp:
        config = os.path.join(tmp, "config.json")
        with open(config, "w") as fh:
            json.dump({"sweep": {"preset": preset}}, fh)
        cmd = [
            sys.executable,
            "-m",
            "ommsim.cli",
            "sweep",
            "--config",
            config,
            "--out-dir",
            str(out_dir),
            "--grid",
            str(grid),
            "--ledger",
            os.path.join(tmp, "deviations.md"),
        ]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        if proc.returncode != 0:
            raise RuntimeError(
                f"`{' '.join(cmd)}` exited {proc.returncode}:\n{proc.stderr}"
            )


def make_inputs(data_dir, grid: int = 2001, datasets=DATASETS) -> list:
    """Generate every dataset; returns the per-dataset output directories."""
    written = []
    for name in datasets:
        out = os.path.join(data_dir, name)
        run_sweep_cli(name, out, grid)
        written.append(out)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="make_figure_inputs", description="generate the figure datasets via the ommsim CLI"
    )
    parser.add_argument("data_dir", help="directory receiving one subdirectory per dataset")
    parser.add_argument("--grid", type=int, default=2001, help="probe detunings per spectrum")
    parser.add_argument(
        "--presets",
        default=",".join(DATASETS),
        help="comma-separated subset of datasets to generate",
    )
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    datasets = tuple(name for name in args.presets.split(",") if name)
    unknown = set(datasets) - set(DATASETS)
    if unknown:
        print(f"make_figure_inputs: unknown dataset(s) {sorted(unknown)}", file=sys.stderr)
        return 2
    try:
        for path in make_inputs(args.data_dir, grid=args.grid, datasets=datasets):
            print(path)
    except RuntimeError as exc:
        print(f"make_figure_inputs: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
