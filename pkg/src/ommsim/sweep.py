"""Parameter sweeps over probe spectra, with feature extraction and export.

A sweep evaluates the response on a 1-D or 2-D parameter grid.  In
fixed-effective mode (the default, matching how working points are usually
tabulated) the effective detunings/couplings are set directly and no fixed
point is solved; fixed-bare mode re-solves the steady state per cell.
Cells are independent work items, so any worker count gives bit-identical
output.
"""

from __future__ import annotations

import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import find_peaks

from . import __version__
from .errors import ConfigError, GridError, PoleError
from .params import EFFECTIVE_KEYS, SystemParams
from .response import spectrum
from .steady import default_steady_state, effective_couplings, effective_state

QUANTITIES = ("lambda", "lambda_tilde", "fwm")
_POINT_ATTR = {"lambda": "lam", "lambda_tilde": "lam_tilde", "fwm": "fwm"}

SWEEP_CSV_HEADER = "axis1,axis2,delta,quantity,value"

#: default prominence threshold, as a fraction of the spectrum's dynamic range
PROMINENCE_FRACTION = 0.01


@dataclass(frozen=True)
class SweepAxis:
    name: str
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise ConfigError(f"sweep axis {self.name!r} has no values")
        if not all(np.isfinite(self.values)):
            raise ConfigError(f"sweep axis {self.name!r} has non-finite values")


@dataclass(frozen=True)
class SweepSpec:
    base: SystemParams
    axis1: SweepAxis
    axis2: SweepAxis | None
    delta_grid: tuple
    quantities: tuple = QUANTITIES
    sweep_mode: str = "fixed-effective"
    effective: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "delta_grid", tuple(float(d) for d in self.delta_grid))
        object.__setattr__(self, "quantities", tuple(self.quantities))
        if self.sweep_mode not in ("fixed-effective", "fixed-bare"):
            raise ConfigError(f"unknown sweep_mode {self.sweep_mode!r}")
        bad = set(self.quantities) - set(QUANTITIES)
        if bad:
            raise ConfigError(f"unknown quantities {sorted(bad)}; choose from {QUANTITIES}")
        grid = np.asarray(self.delta_grid)
        if grid.size == 0 or (grid.size > 1 and not np.all(np.diff(grid) > 0)):
            raise ConfigError("delta_grid must be non-empty and strictly increasing")
        valid = set(SystemParams.__dataclass_fields__) | set(EFFECTIVE_KEYS)
        for axis in self.axes:
            if axis.name not in valid:
                raise ConfigError(f"unknown sweep parameter {axis.name!r}")
            if self.sweep_mode == "fixed-bare" and axis.name in EFFECTIVE_KEYS:
                raise ConfigError(
                    f"axis {axis.name!r} is an effective parameter; use fixed-effective mode"
                )
        bad_eff = set(self.effective) - set(EFFECTIVE_KEYS)
        if bad_eff:
            raise ConfigError(f"unknown effective key(s) {sorted(bad_eff)}")

    @property
    def axes(self):
        return (self.axis1,) if self.axis2 is None else (self.axis1, self.axis2)

    @property
    def shape(self):
        n2 = 1 if self.axis2 is None else len(self.axis2.values)
        return (len(self.axis1.values), n2)

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "effective": dict(self.effective),
            "axis1": {"name": self.axis1.name, "values": list(self.axis1.values)},
            "axis2": None
            if self.axis2 is None
            else {"name": self.axis2.name, "values": list(self.axis2.values)},
            "delta_grid": list(self.delta_grid),
            "quantities": list(self.quantities),
            "sweep_mode": self.sweep_mode,
        }


@dataclass(frozen=True)
class FeatureSet:
    """Extracted spectral features: (position, height, prominence) triples."""

    peaks: tuple
    dips: tuple
    peak_count: int
    asymmetry: float

    def to_dict(self) -> dict:
        return {
            "peaks": [list(p) for p in self.peaks],
            "dips": [list(d) for d in self.dips],
            "peak_count": self.peak_count,
            "asymmetry": self.asymmetry,
        }


@dataclass
class SweepResult:
    spec: dict
    values: dict  # quantity -> ndarray (n1, n2, n_delta)
    features: dict  # quantity -> nested list [i1][i2] of FeatureSet
    excluded: list
    provenance: dict


def _quadratic_refine(x, y, i):
    """Vertex of the parabola through three neighbouring samples."""
    h = x[1] - x[0]
    curv = y[i - 1] - 2.0 * y[i] + y[i + 1]
    if curv == 0.0:
        return float(x[i]), float(y[i])
    off = 0.5 * (y[i - 1] - y[i + 1]) / curv
    return float(x[i] + off * h), float(y[i] - 0.25 * (y[i - 1] - y[i + 1]) * off)


def _extrema_features(x, y, prominence):
    peaks_idx, peak_props = find_peaks(y, prominence=prominence)
    dips_idx, dip_props = find_peaks(-y, prominence=prominence)
    peaks = tuple(
        (*_quadratic_refine(x, y, i), float(p))
        for i, p in zip(peaks_idx, peak_props["prominences"])
    )
    dips = tuple(
        (*_quadratic_refine(x, y, i), float(p))
        for i, p in zip(dips_idx, dip_props["prominences"])
    )
    return peaks, dips


def _asymmetry(x, y):
    """Height difference of the extremes flanking the steepest derivative sign change.

    Uses unthresholded extrema; falls back to the grid endpoints when the
    steepest swing sits at the edge of the scanned range.
    """
    dy = np.diff(y)
    mx, _ = find_peaks(y)
    mn, _ = find_peaks(-y)
    extrema = sorted(list(mx) + list(mn))
    best, best_i = -1.0, None
    for k in range(len(dy) - 1):
        if dy[k] == 0.0 or dy[k] * dy[k + 1] > 0.0:
            continue
        steep = abs(dy[k + 1] - dy[k])
        if steep > best:
            best, best_i = steep, k + 1
    if best_i is None:
        return 0.0
    left = [i for i in extrema if i < best_i]
    right = [i for i in extrema if i > best_i]
    h_left = _quadratic_refine(x, y, left[-1])[1] if left else float(y[0])
    h_right = _quadratic_refine(x, y, right[0])[1] if right else float(y[-1])
    return abs(h_right - h_left)


def detect_features(points, quantity, prominence_threshold=None) -> FeatureSet:
    """Local extrema of one response quantity with quadratic refinement.

    ``points`` is a spectrum (list of ResponsePoint) on a uniform grid of at
    least 5 detunings.  ``prominence_threshold`` is absolute; when omitted it
    defaults to 1% of the spectrum's dynamic range.
    """
    if quantity not in QUANTITIES:
        raise ConfigError(f"unknown quantity {quantity!r}")
    x = np.array([p.delta for p in points], dtype=float)
    y = np.array([getattr(p, _POINT_ATTR[quantity]) for p in points], dtype=float)
    return _detect_features_arrays(x, y, prominence_threshold)


def _detect_features_arrays(x, y, prominence_threshold=None) -> FeatureSet:
    if x.size < 5:
        raise GridError("feature detection needs at least 5 points")
    steps = np.diff(x)
    if not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
        raise GridError("feature detection needs a uniform delta grid")
    if prominence_threshold is None:
        dyn = float(y.max() - y.min())
        prominence_threshold = PROMINENCE_FRACTION * dyn if dyn > 0 else np.inf
    peaks, dips = _extrema_features(x, y, prominence_threshold)
    return FeatureSet(
        peaks=peaks, dips=dips, peak_count=len(peaks), asymmetry=float(_asymmetry(x, y))
    )


def cell_params(spec: SweepSpec, i1: int, i2: int):
    """Base parameters plus axis overrides for one grid cell.

    Returns (SystemParams, effective-overlay dict).
    """
    overrides = {spec.axis1.name: spec.axis1.values[i1]}
    if spec.axis2 is not None:
        overrides[spec.axis2.name] = spec.axis2.values[i2]
    eff = dict(spec.effective)
    bare = {}
    for name, value in overrides.items():
        if name in EFFECTIVE_KEYS:
            eff[name] = value
        else:
            bare[name] = value
    params = spec.base.replace(**bare) if bare else spec.base
    return params, eff


def _evaluate_cell(spec: SweepSpec, i1: int, i2: int):
    params, eff_overlay = cell_params(spec, i1, i2)
    if spec.sweep_mode == "fixed-effective":
        ss, eff = effective_state(
            delta_c=eff_overlay.get("delta_c", params.delta_c0),
            delta_m=eff_overlay.get("delta_m", params.delta_m0),
            G_cb=eff_overlay.get("G_cb", 0.0),
            G_mb=eff_overlay.get("G_mb", 0.0),
        )
    else:
        if eff_overlay:
            raise ConfigError(
                f"effective keys {sorted(eff_overlay)} are not allowed in fixed-bare mode"
            )
        ss = default_steady_state(params)
        eff = effective_couplings(params, ss)
    points = spectrum(params, ss, eff, spec.delta_grid)
    return {
        q: np.array([getattr(p, _POINT_ATTR[q]) for p in points], dtype=float)
        for q in spec.quantities
    }


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Evaluate every cell; pole cells are excluded, never fatal.

    Results are merged in cell-index order, so the output is independent of
    ``workers``.
    """
    n1, n2 = spec.shape
    nd = len(spec.delta_grid)
    values = {q: np.full((n1, n2, nd), np.nan) for q in spec.quantities}
    excluded = []

    def work(idx):
        i1, i2 = divmod(idx, n2)
        try:
            return idx, _evaluate_cell(spec, i1, i2), None
        except PoleError as exc:
            return idx, None, str(exc)

    indices = range(n1 * n2)
    if workers <= 1:
        outcomes = [work(i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(work, indices))
    for idx, cell, err in outcomes:
        i1, i2 = divmod(idx, n2)
        if err is not None:
            excluded.append({"i1": i1, "i2": i2, "reason": err})
            continue
        for q in spec.quantities:
            values[q][i1, i2, :] = cell[q]

    x = np.asarray(spec.delta_grid)
    features = {}
    for q in spec.quantities:
        features[q] = [
            [
                None
                if np.any(np.isnan(values[q][i1, i2]))
                else (
                    _detect_features_arrays(x, values[q][i1, i2]) if nd >= 5 else None
                )
                for i2 in range(n2)
            ]
            for i1 in range(n1)
        ]
    return SweepResult(
        spec=spec.to_dict(),
        values=values,
        features=features,
        excluded=excluded,
        provenance={"engine": f"ommsim {__version__}"},
    )


def _fmt(v: float) -> str:
    return repr(float(v))


def export(result: SweepResult, fmt: str) -> bytes:
    """Serialize a sweep result; row/field order is stable so re-exports match."""
    if fmt == "csv":
        return _export_csv(result)
    if fmt == "json":
        return _export_json(result)
    raise ConfigError(f"unknown export format {fmt!r}")


def _export_csv(result: SweepResult) -> bytes:
    spec = result.spec
    a1 = spec["axis1"]["values"]
    a2 = spec["axis2"]["values"] if spec["axis2"] else [None]
    deltas = spec["delta_grid"]
    buf = io.StringIO()
    buf.write(SWEEP_CSV_HEADER + "\n")
    for i1, v1 in enumerate(a1):
        for i2, v2 in enumerate(a2):
            for q in spec["quantities"]:
                row_v2 = "" if v2 is None else _fmt(v2)
                arr = result.values[q][i1, i2]
                for k, d in enumerate(deltas):
                    buf.write(f"{_fmt(v1)},{row_v2},{_fmt(d)},{q},{_fmt(arr[k])}\n")
    return buf.getvalue().encode()


def _features_jsonable(result: SweepResult) -> dict:
    return {
        q: [
            [None if f is None else f.to_dict() for f in row]
            for row in result.features[q]
        ]
        for q in result.features
    }


def _export_json(result: SweepResult) -> bytes:
    doc = {
        "spec": result.spec,
        "values": {q: result.values[q].tolist() for q in result.spec["quantities"]},
        "features": _features_jsonable(result),
        "excluded": result.excluded,
        "provenance": result.provenance,
    }
    return (json.dumps(doc, indent=2) + "\n").encode()


def parse_csv(data: bytes) -> SweepResult:
    """Rebuild a (values-only) SweepResult from an exported CSV document."""
    lines = data.decode().splitlines()
    if not lines or lines[0] != SWEEP_CSV_HEADER:
        raise ConfigError(f"unexpected sweep CSV header: {lines[0] if lines else '<empty>'!r}")
    a1_vals, a2_vals, deltas, quantities = [], [], [], []
    rows = []
    for line in lines[1:]:
        v1_s, v2_s, d_s, q, val_s = line.split(",")
        v1 = float(v1_s)
        v2 = None if v2_s == "" else float(v2_s)
        d = float(d_s)
        rows.append((v1, v2, d, q, float(val_s)))
        if not a1_vals or a1_vals[-1] != v1:
            if v1 not in a1_vals:
                a1_vals.append(v1)
        if v2 is not None and v2 not in a2_vals:
            a2_vals.append(v2)
        if q not in quantities:
            quantities.append(q)
        if d not in deltas:
            if not deltas or d > deltas[-1]:
                deltas.append(d)
    has_axis2 = bool(a2_vals)
    n1 = len(a1_vals)
    n2 = len(a2_vals) if has_axis2 else 1
    nd = len(deltas)
    values = {q: np.full((n1, n2, nd), np.nan) for q in quantities}
    d_index = {d: k for k, d in enumerate(deltas)}
    a1_index = {v: i for i, v in enumerate(a1_vals)}
    a2_index = {v: i for i, v in enumerate(a2_vals)} if has_axis2 else {}
    for v1, v2, d, q, val in rows:
        i2 = a2_index[v2] if has_axis2 else 0
        values[q][a1_index[v1], i2, d_index[d]] = val
    spec = {
        "base": None,
        "effective": {},
        "axis1": {"name": "axis1", "values": a1_vals},
        "axis2": {"name": "axis2", "values": a2_vals} if has_axis2 else None,
        "delta_grid": deltas,
        "quantities": quantities,
        "sweep_mode": "parsed",
    }
    return SweepResult(
        spec=spec,
        values=values,
        features={q: [[None] * n2 for _ in range(n1)] for q in quantities},
        excluded=[],
        provenance={"engine": f"ommsim {__version__}"},
    )


def parse_json(data: bytes) -> SweepResult:
    """Rebuild a SweepResult from an exported JSON document."""
    doc = json.loads(data.decode())
    values = {q: np.asarray(doc["values"][q], dtype=float) for q in doc["spec"]["quantities"]}
    features = {
        q: [
            [
                None
                if f is None
                else FeatureSet(
                    peaks=tuple(tuple(p) for p in f["peaks"]),
                    dips=tuple(tuple(d) for d in f["dips"]),
                    peak_count=f["peak_count"],
                    asymmetry=f["asymmetry"],
                )
                for f in row
            ]
            for row in doc["features"][q]
        ]
        for q in doc["features"]
    }
    return SweepResult(
        spec=doc["spec"],
        values=values,
        features=features,
        excluded=doc["excluded"],
        provenance=doc["provenance"],
    )


def write_outputs(result: SweepResult, out_dir) -> list:
    """One CSV per quantity plus features.json; returns the written paths."""
    import os

    os.makedirs(out_dir, exist_ok=True)
    written = []
    for q in result.spec["quantities"]:
        single = SweepResult(
            spec={**result.spec, "quantities": [q]},
            values={q: result.values[q]},
            features={q: result.features[q]},
            excluded=result.excluded,
            provenance=result.provenance,
        )
        path = os.path.join(out_dir, f"{q}.csv")
        with open(path, "wb") as fh:
            fh.write(export(single, "csv"))
        written.append(path)
    feat_path = os.path.join(out_dir, "features.json")
    doc = {
        "spec": result.spec,
        "features": _features_jsonable(result),
        "excluded": result.excluded,
    }
    with open(feat_path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    written.append(feat_path)
    return written
