"""Dispersive magnon-phonon coupling from a sampled displacement eigenmode.

The coupling rate is the volume integral of the strain combination
d(chi_x)/dx + d(chi_y)/dy - 2 d(chi_z)/dz over the crystal, scaled by the
magnetoelastic prefactor B1*gamma*d_zpm/(M_s*V).  Modes arrive as regular
grid samples so externally computed eigenmodes can be ingested from file.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, GridError

VOLUME_RTOL = 1e-9

MODE_CSV_HEADER = ["x_index", "y_index", "z_index", "chi_x", "chi_y", "chi_z"]


@dataclass(frozen=True)
class MaterialParams:
    """Magnetoelastic material constants.

    B1, B2 : magnetoelastic coefficients (J/m^3); B2 is carried for
        completeness but does not enter the dispersive coupling.
    M_s : saturation magnetization (A/m)
    gamma : gyromagnetic ratio entering the prefactor (Hz/T)
    volume : crystal volume (m^3)
    d_zpm : zero-point motion amplitude (m)
    """

    B1: float
    B2: float
    M_s: float
    gamma: float
    volume: float
    d_zpm: float

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"material.{name} must be a finite number")
            object.__setattr__(self, name, float(value))
        if self.M_s <= 0 or self.volume <= 0 or self.d_zpm <= 0:
            raise ConfigError("material M_s, volume and d_zpm must be > 0")


@dataclass(frozen=True)
class ModeShapeGrid:
    """Displacement eigenmode sampled on a regular grid.

    nx, ny, nz are point counts (>= 2 each); spacing holds (hx, hy, hz) in
    meters; chi_x/chi_y/chi_z have shape (nx, ny, nz).
    """

    nx: int
    ny: int
    nz: int
    spacing: tuple
    chi_x: np.ndarray
    chi_y: np.ndarray
    chi_z: np.ndarray

    def __post_init__(self):
        if min(self.nx, self.ny, self.nz) < 2:
            raise GridError("mode grid needs at least 2 points per axis")
        if len(self.spacing) != 3 or any(h <= 0 for h in self.spacing):
            raise GridError("spacing must be three positive lengths")
        shape = (self.nx, self.ny, self.nz)
        for name in ("chi_x", "chi_y", "chi_z"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.shape != shape:
                raise GridError(f"{name} has shape {arr.shape}, expected {shape}")
            if not np.all(np.isfinite(arr)):
                raise GridError(f"{name} contains non-finite samples")
            object.__setattr__(self, name, arr)

    @property
    def cell_volume(self) -> float:
        hx, hy, hz = self.spacing
        return hx * hy * hz

    @property
    def covered_volume(self) -> float:
        hx, hy, hz = self.spacing
        return (self.nx - 1) * hx * (self.ny - 1) * hy * (self.nz - 1) * hz


def strain_integrand(grid: ModeShapeGrid) -> np.ndarray:
    """Pointwise d(chi_x)/dx + d(chi_y)/dy - 2 d(chi_z)/dz.

    Central differences in the interior, second-order one-sided stencils at
    the boundaries (edge_order=1 would telescope the axis integrals exactly
    and hide the quadrature order).
    """
    hx, hy, hz = grid.spacing
    dxx = np.gradient(grid.chi_x, hx, axis=0, edge_order=2)
    dyy = np.gradient(grid.chi_y, hy, axis=1, edge_order=2)
    dzz = np.gradient(grid.chi_z, hz, axis=2, edge_order=2)
    return dxx + dyy - 2.0 * dzz


def volume_integral(grid: ModeShapeGrid, field: np.ndarray) -> float:
    """Trapezoid quadrature of a sampled scalar field over the grid."""
    hx, hy, hz = grid.spacing
    out = np.trapezoid(field, dx=hz, axis=2)
    out = np.trapezoid(out, dx=hy, axis=1)
    return float(np.trapezoid(out, dx=hx, axis=0))


def magnon_phonon_coupling(grid: ModeShapeGrid, mat: MaterialParams) -> float:
    """Dispersive coupling rate g = (B1/M_s)(gamma/V) d_zpm * integral."""
    if abs(grid.covered_volume - mat.volume) > VOLUME_RTOL * mat.volume:
        raise GridError(
            f"grid covers {grid.covered_volume!r} m^3 but the material volume is {mat.volume!r} m^3"
        )
    integral = volume_integral(grid, strain_integrand(grid))
    return (mat.B1 / mat.M_s) * (mat.gamma / mat.volume) * mat.d_zpm * integral


def coupling_report(grid: ModeShapeGrid, mat: MaterialParams) -> dict:
    """JSON-ready record: coupling rate, raw integral, grid geometry."""
    if abs(grid.covered_volume - mat.volume) > VOLUME_RTOL * mat.volume:
        raise GridError(
            f"grid covers {grid.covered_volume!r} m^3 but the material volume is {mat.volume!r} m^3"
        )
    integral = volume_integral(grid, strain_integrand(grid))
    g = (mat.B1 / mat.M_s) * (mat.gamma / mat.volume) * mat.d_zpm * integral
    hx, hy, hz = grid.spacing
    return {
        "g_mb": g,
        "integral_value": integral,
        "grid_report": {
            "nx": grid.nx,
            "ny": grid.ny,
            "nz": grid.nz,
            "hx": hx,
            "hy": hy,
            "hz": hz,
            "covered_volume": grid.covered_volume,
        },
    }


def write_mode_files(grid: ModeShapeGrid, csv_path, sidecar_path) -> None:
    """Write the mode CSV (row-major, z fastest) and its JSON sidecar."""
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(MODE_CSV_HEADER)
        for i in range(grid.nx):
            for j in range(grid.ny):
                for k in range(grid.nz):
                    writer.writerow(
                        [
                            i,
                            j,
                            k,
                            repr(float(grid.chi_x[i, j, k])),
                            repr(float(grid.chi_y[i, j, k])),
                            repr(float(grid.chi_z[i, j, k])),
                        ]
                    )
    hx, hy, hz = grid.spacing
    sidecar = {"nx": grid.nx, "ny": grid.ny, "nz": grid.nz, "hx": hx, "hy": hy, "hz": hz}
    with open(sidecar_path, "w") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")


def read_mode_files(csv_path, sidecar_path) -> ModeShapeGrid:
    """Load a mode grid from the CSV + JSON sidecar pair."""
    with open(sidecar_path) as fh:
        meta = json.load(fh)
    try:
        nx, ny, nz = int(meta["nx"]), int(meta["ny"]), int(meta["nz"])
        spacing = (float(meta["hx"]), float(meta["hy"]), float(meta["hz"]))
    except KeyError as exc:
        raise ConfigError(f"mode sidecar missing field {exc}") from None
    shape = (nx, ny, nz)
    chi = [np.zeros(shape) for _ in range(3)]
    with open(csv_path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != MODE_CSV_HEADER:
            raise ConfigError(f"mode CSV header {header!r} != {MODE_CSV_HEADER!r}")
        for row in reader:
            i, j, k = int(row[0]), int(row[1]), int(row[2])
            for axis in range(3):
                chi[axis][i, j, k] = float(row[3 + axis])
    return ModeShapeGrid(
        nx=nx, ny=ny, nz=nz, spacing=spacing, chi_x=chi[0], chi_y=chi[1], chi_z=chi[2]
    )
