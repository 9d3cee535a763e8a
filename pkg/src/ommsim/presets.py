"""Canonical parameter studies (fig2 .. fig7) used by the demos, the
acceptance suite and the figure-rendering package.

All studies use the reference rates kappa_c = 0.1, kappa_m = 0.01,
gamma_b = 1e-5 (units of omega_b) with effective couplings set directly
(fixed-effective mode): G_cb = 0.05 throughout, G_mb = 0.5 unless a study
varies it.  Where a study's constants are not pinned by the reference
parameter table, the choice is recorded in deviations.md.
"""

from __future__ import annotations

import numpy as np

from .params import SystemParams
from .sweep import SweepAxis, SweepSpec

TABLE_PARAMS = SystemParams(
    omega_b=1.0, kappa_c=0.1, kappa_m=0.01, gamma_b=1e-5, eps_p=1.0
)

G_CB = 0.05
G_MB = 0.5


def delta_grid(n: int = 2001, span: float = 2.0) -> tuple:
    return tuple(np.linspace(-span, span, n))


def fig2(panel: str = "a", n_delta: int = 2001, n_dm: int = 41) -> SweepSpec:
    """In-phase quadrature over (delta, delta_m); panels a/b/c differ in delta_c."""
    delta_c = {"a": 1.0, "b": 1.05, "c": 0.95}[panel]
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("delta_m", tuple(np.linspace(0.0, 1.0, n_dm))),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("lambda",),
        effective={"delta_c": delta_c, "G_cb": G_CB, "G_mb": G_MB},
    )


def fig2a_curves(n_delta: int = 2001) -> SweepSpec:
    """The discrete delta_m family of the fig2 line plot."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("delta_m", (0.0, 0.3, 0.7, 0.9, 1.0)),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("lambda",),
        effective={"delta_c": 1.0, "G_cb": G_CB, "G_mb": G_MB},
    )


def fig2a_reference(n_delta: int = 2001) -> SweepSpec:
    """Magnon-free reference curve (G_mb = 0) of the fig2 line plot."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("G_mb", (0.0,)),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("lambda",),
        effective={"delta_c": 1.0, "delta_m": 0.0, "G_cb": G_CB},
    )


def fig3(g_mb: float, n_delta: int = 2001) -> SweepSpec:
    """Quadrature curves vs delta for delta_m and delta_c families at one G_mb."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("delta_m", (0.0, 0.3, 0.7, 0.9)),
        axis2=SweepAxis("delta_c", (0.9, 1.0, 1.1)),
        delta_grid=delta_grid(n_delta),
        quantities=("lambda",),
        effective={"G_cb": G_CB, "G_mb": g_mb},
    )


def fig4(n_delta: int = 2001) -> SweepSpec:
    """Quadrature curves: delta_c family per delta_m column."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("delta_c", (0.8, 0.9, 1.0, 1.1, 1.2)),
        axis2=SweepAxis("delta_m", (0.1, 0.3, 0.5)),
        delta_grid=delta_grid(n_delta),
        quantities=("lambda",),
        effective={"G_cb": G_CB, "G_mb": G_MB},
    )


def fig5a(n_delta: int = 2001, dm_values: tuple = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8, 1.0)) -> SweepSpec:
    """Four-wave-mixing spectra for a magnon-detuning family at delta_c = 1."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("delta_m", dm_values),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("fwm",),
        effective={"delta_c": 1.0, "G_cb": G_CB, "G_mb": G_MB},
    )


def fig5c(n_delta: int = 2001) -> SweepSpec:
    """Four-wave-mixing spectra for a cavity-detuning family at delta_m = 0.4.

    The family sits above the double-resonance anti-dip (see deviations.md).
    """
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("delta_c", (1.1, 1.15, 1.2, 1.25, 1.3)),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("fwm",),
        effective={"delta_m": 0.4, "G_cb": G_CB, "G_mb": G_MB},
    )


def fig6(delta_m: float, n_delta: int = 2001) -> SweepSpec:
    """Four-wave-mixing spectra for a magnomechanical-coupling family."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("G_mb", (0.1, 0.2, 0.3, 0.4, 0.5, 0.6)),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("fwm",),
        effective={"delta_c": 1.0, "delta_m": delta_m, "G_cb": G_CB},
    )


def fig7a(n_delta: int = 2001) -> SweepSpec:
    """Four-wave mixing vs cavity decay (kappa_m = 0.01, delta_m = 0)."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("kappa_c", (0.04, 0.06, 0.08, 0.1)),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("fwm",),
        effective={"delta_c": 1.0, "delta_m": 0.0, "G_cb": G_CB, "G_mb": G_MB},
    )


def fig7b(n_delta: int = 2001) -> SweepSpec:
    """Four-wave mixing vs magnon decay (kappa_c = 0.1, delta_m = 1)."""
    return SweepSpec(
        base=TABLE_PARAMS,
        axis1=SweepAxis("kappa_m", (0.005, 0.01, 0.02, 0.04)),
        axis2=None,
        delta_grid=delta_grid(n_delta),
        quantities=("fwm",),
        effective={"delta_c": 1.0, "delta_m": 1.0, "G_cb": G_CB, "G_mb": G_MB},
    )


def preset(name: str, n_delta: int = 2001) -> SweepSpec:
    """Look up one of the named studies."""
    table = {
        "fig2a": lambda: fig2("a", n_delta),
        "fig2b": lambda: fig2("b", n_delta),
        "fig2c": lambda: fig2("c", n_delta),
        "fig2a_curves": lambda: fig2a_curves(n_delta),
        "fig2a_reference": lambda: fig2a_reference(n_delta),
        "fig3_weak": lambda: fig3(0.2, n_delta),
        "fig3_strong": lambda: fig3(0.5, n_delta),
        "fig4": lambda: fig4(n_delta),
        "fig5a": lambda: fig5a(n_delta),
        "fig5c": lambda: fig5c(n_delta),
        "fig6a": lambda: fig6(0.5, n_delta),
        "fig6b": lambda: fig6(1.0, n_delta),
        "fig7a": lambda: fig7a(n_delta),
        "fig7b": lambda: fig7b(n_delta),
    }
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(table)}") from None


PRESET_NAMES = (
    "fig2a",
    "fig2b",
    "fig2c",
    "fig2a_curves",
    "fig2a_reference",
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


def figure_working_points() -> list:
    """Every (label, params, delta_c, delta_m, G_cb, G_mb) cell of the studies.

    Used by the stability survey: each cell is one working point whose drift
    matrix can be eigensolved.
    """
    from .sweep import cell_params

    points = []
    for name in PRESET_NAMES:
        spec = preset(name, n_delta=5)
        n1, n2 = spec.shape
        for i1 in range(n1):
            for i2 in range(n2):
                params, overlay = cell_params(spec, i1, i2)
                points.append(
                    (
                        f"{name}[{i1},{i2}]",
                        params,
                        overlay.get("delta_c", params.delta_c0),
                        overlay.get("delta_m", params.delta_m0),
                        complex(overlay.get("G_cb", 0.0)),
                        complex(overlay.get("G_mb", 0.0)),
                    )
                )
    return points
