"""Independent ground truth: the 8x8 frequency-domain sideband system.

Matching the e^{-i delta t} and e^{+i delta t} coefficients of the linearized
equations of motion (and their Hermitian conjugates) gives a dense linear
system for the sideband amplitudes.  Nothing here touches the closed-form
Theta/chi/alpha algebra of ommsim.response; the two routes are compared in
ommsim.verify.

Unknown ordering: (q-, q+, p-, p+, c-, c+, m-, m+).  To keep the system
linear, the columns of the '+' components store the conjugated amplitudes
(q+)*, (p+)*, (c+)*, (m+)*; the conjugate equations reduce to the same rows,
so Hermiticity of dq and dp (q+ = (q-)*, p+ = (p-)*) is not imposed but
emerges from the solution and is reported as ``conjugation_defect``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PoleError
from .params import SystemParams
from .steady import EffectiveCouplings, SteadyState

UNKNOWN_ORDER = ("q-", "q+*", "p-", "p+*", "c-", "c+*", "m-", "m+*")


@dataclass(frozen=True)
class SidebandSystem:
    matrix: np.ndarray  # 8x8 complex
    rhs: np.ndarray  # 8 complex
    delta: float


@dataclass(frozen=True)
class FluctuationAmplitudes:
    q_minus: complex
    p_minus: complex
    c_minus: complex
    c_plus: complex
    m_minus: complex
    m_plus: complex
    residual: float
    conjugation_defect: float


def assemble(
    params: SystemParams, ss: SteadyState, eff: EffectiveCouplings, delta: float
) -> SidebandSystem:
    """Coefficient matrix and drive vector at probe detuning ``delta``."""
    wb, gb = params.omega_b, params.gamma_b
    kc, km = params.kappa_c, params.kappa_m
    dc, dm = ss.delta_c, ss.delta_m
    gc, gm = complex(eff.G_cb), complex(eff.G_mb)

    o1m = km - 1j * (dm + delta)
    o2m = km + 1j * (dm - delta)
    o1c = kc - 1j * (dc + delta)
    o2c = kc + 1j * (dc - delta)

    a = np.zeros((8, 8), dtype=complex)
    b = np.zeros(8, dtype=complex)

    # dq rows: -i*delta q -/+ = omega_b p -/+
    a[0, 0] = -1j * delta
    a[0, 2] = -wb
    a[1, 1] = -1j * delta
    a[1, 3] = -wb
    # dp rows: restoring force -omega_b*dq, damping, and the field terms
    for row, qcol, pcol in ((2, 0, 2), (3, 1, 3)):
        a[row, qcol] = wb
        a[row, pcol] = gb - 1j * delta
        a[row, 4] = -np.conj(gc)
        a[row, 5] = -gc
        a[row, 6] = np.conj(gm)
        a[row, 7] = gm
    # dc row at e^{-i delta t} carries the probe drive
    a[4, 4] = o2c
    a[4, 0] = -1j * gc
    b[4] = params.eps_p
    # conjugate dc row at e^{+i delta t}
    a[5, 5] = o1c
    a[5, 1] = 1j * np.conj(gc)
    # dm rows
    a[6, 6] = o2m
    a[6, 0] = 1j * gm
    a[7, 7] = o1m
    a[7, 1] = -1j * np.conj(gm)
    return SidebandSystem(matrix=a, rhs=b, delta=float(delta))


def solve(system: SidebandSystem) -> FluctuationAmplitudes:
    """Dense partial-pivoting solve of the assembled system.

    One iterative-refinement step with an extended-precision residual keeps
    the forward error well below 1e-10 even within a linewidth of the
    near-singular double resonances (condition numbers up to ~1e7).
    """
    try:
        x = np.linalg.solve(system.matrix, system.rhs)
        hi = np.complex256 if hasattr(np, "complex256") else np.complex128
        residual_hi = np.asarray(system.rhs, dtype=hi) - (
            np.asarray(system.matrix, dtype=hi) @ np.asarray(x, dtype=hi)
        )
        x = x + np.linalg.solve(system.matrix, residual_hi.astype(np.complex128))
    except np.linalg.LinAlgError as exc:
        raise PoleError("sideband system singular", system.delta) from exc
    residual = float(
        np.linalg.norm(system.matrix @ x - system.rhs) / max(np.linalg.norm(system.rhs), 1e-300)
    )
    # columns 1 and 3 hold (q+)* and (p+)*, which must reproduce q- and p-
    conj_defect = float(abs(x[1] - x[0]) + abs(x[3] - x[2]))
    return FluctuationAmplitudes(
        q_minus=complex(x[0]),
        p_minus=complex(x[2]),
        c_minus=complex(x[4]),
        c_plus=complex(np.conj(x[5])),
        m_minus=complex(x[6]),
        m_plus=complex(np.conj(x[7])),
        residual=residual,
        conjugation_defect=conj_defect,
    )
