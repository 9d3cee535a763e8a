"""Linear stability of a working point.

The fluctuation dynamics are written in the 6-dimensional quadrature basis
(dq, dp, Re dc, Im dc, Re dm, Im dm); the drift matrix is real, so its
eigenvalues close under conjugation and the working point is stable iff all
real parts are negative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OmmsimError
from .params import SystemParams
from .steady import EffectiveCouplings


def drift_matrix_elements(
    omega_b: float,
    gamma_b: float,
    kappa_c: float,
    kappa_m: float,
    delta_c: float,
    delta_m: float,
    G_cb: complex,
    G_mb: complex,
) -> np.ndarray:
    """Real 6x6 drift matrix from raw rates (no parameter validation)."""
    gr, gi = G_cb.real, G_cb.imag
    hr, hi = G_mb.real, G_mb.imag
    return np.array(
        [
            [0.0, omega_b, 0.0, 0.0, 0.0, 0.0],
            [-omega_b, -gamma_b, 2 * gr, 2 * gi, -2 * hr, -2 * hi],
            [-gi, 0.0, -kappa_c, delta_c, 0.0, 0.0],
            [gr, 0.0, -delta_c, -kappa_c, 0.0, 0.0],
            [hi, 0.0, 0.0, 0.0, -kappa_m, delta_m],
            [-hr, 0.0, 0.0, 0.0, -delta_m, -kappa_m],
        ],
        dtype=float,
    )


def drift_matrix(
    params: SystemParams,
    eff: EffectiveCouplings,
    delta_c: float | None = None,
    delta_m: float | None = None,
) -> np.ndarray:
    """Drift matrix at the effective detunings (bare ones when not given)."""
    return drift_matrix_elements(
        params.omega_b,
        params.gamma_b,
        params.kappa_c,
        params.kappa_m,
        params.delta_c0 if delta_c is None else delta_c,
        params.delta_m0 if delta_m is None else delta_m,
        complex(eff.G_cb),
        complex(eff.G_mb),
    )


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: tuple
    stable: bool
    margin: float

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [{"re": ev.real, "im": ev.imag} for ev in self.eigenvalues],
            "stable": self.stable,
            "margin": self.margin,
        }


def assess_stability(matrix: np.ndarray) -> StabilityReport:
    """Eigensolve the drift matrix; stable iff the largest real part is negative."""
    try:
        ev = np.linalg.eigvals(np.asarray(matrix, dtype=float))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails on 6x6
        raise OmmsimError(f"eigensolver failed on drift matrix:\n{matrix!r}") from exc
    ev = sorted((complex(v) for v in ev), key=lambda v: (-v.real, v.imag))
    margin = float(ev[0].real)
    return StabilityReport(eigenvalues=tuple(ev), stable=margin < 0.0, margin=margin)
