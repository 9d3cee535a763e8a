"""Self-consistent steady state of the driven cavity-magnon-mechanics model.

The static displacement q_s solves the scalar fixed-point equation

    q = f(q) = (g_cb |c_s(q)|^2 - g_mb |m_s(q)|^2) / omega_b,

with c_s = eps_L / (i*Delta_c + kappa_c), m_s = omega_rabi / (i*Delta_m + kappa_m)
and the shifted detunings Delta_c = delta_c0 - g_cb*q, Delta_m = delta_m0 + g_mb*q.
The magnon Lorentzian feedback can make this multistable; all real roots inside
an automatically sized bracket are returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BracketError
from .params import EffectiveSettings, SystemParams

RESIDUAL_TOL = 1e-12
BISECT_TOL = 1e-14


@dataclass(frozen=True)
class SteadyState:
    """One fixed-point branch.

    q_s, p_s are the static mechanical displacement and momentum (p_s is
    always 0), c_s and m_s the static field amplitudes, delta_c/delta_m the
    effective (shifted) detunings, residual = |q_s - f(q_s)|.
    """

    q_s: float
    p_s: float
    c_s: complex
    m_s: complex
    delta_c: float
    delta_m: float
    residual: float
    branch_id: int = 0
    is_default: bool = True

    def to_dict(self) -> dict:
        return {
            "q_s": self.q_s,
            "p_s": self.p_s,
            "c_s": {"re": self.c_s.real, "im": self.c_s.imag},
            "m_s": {"re": self.m_s.real, "im": self.m_s.imag},
            "delta_c": self.delta_c,
            "delta_m": self.delta_m,
            "residual": self.residual,
            "branch_id": self.branch_id,
            "is_default": self.is_default,
        }


@dataclass(frozen=True)
class EffectiveCouplings:
    """Pump-enhanced couplings G_cb = sqrt(2) g_cb c_s, G_mb = sqrt(2) g_mb m_s."""

    G_cb: complex
    G_mb: complex


def _amplitudes(params: SystemParams, q, g_cb=None, g_mb=None):
    """Field amplitudes and shifted detunings at displacement q (vectorized)."""
    g_cb = params.g_cb if g_cb is None else g_cb
    g_mb = params.g_mb if g_mb is None else g_mb
    delta_c = params.delta_c0 - g_cb * q
    delta_m = params.delta_m0 + g_mb * q
    c_s = params.eps_L / (1j * delta_c + params.kappa_c)
    m_s = params.omega_rabi / (1j * delta_m + params.kappa_m)
    return c_s, m_s, delta_c, delta_m


def _defect(params: SystemParams, q, g_cb=None, g_mb=None):
    """d(q) = q - f(q); roots of d are the steady states."""
    g_cb = params.g_cb if g_cb is None else g_cb
    g_mb = params.g_mb if g_mb is None else g_mb
    c_s, m_s, _, _ = _amplitudes(params, q, g_cb, g_mb)
    f = (g_cb * np.abs(c_s) ** 2 - g_mb * np.abs(m_s) ** 2) / params.omega_b
    return q - f


def _defect_derivative(params: SystemParams, q, g_cb=None, g_mb=None):
    g_cb = params.g_cb if g_cb is None else g_cb
    g_mb = params.g_mb if g_mb is None else g_mb
    u = params.delta_c0 - g_cb * q
    v = params.delta_m0 + g_mb * q
    d_lc = 2.0 * g_cb * u * params.eps_L**2 / (u * u + params.kappa_c**2) ** 2
    d_lm = -2.0 * g_mb * v * params.omega_rabi**2 / (v * v + params.kappa_m**2) ** 2
    return 1.0 - (g_cb * d_lc - g_mb * d_lm) / params.omega_b


def _scan_grid(params: SystemParams, n_scan: int) -> np.ndarray:
    """Scan points: uniform background plus clusters around the Lorentzian centers."""
    lo = -params.g_mb * params.omega_rabi**2 / (params.omega_b * params.kappa_m**2)
    hi = params.g_cb * params.eps_L**2 / (params.omega_b * params.kappa_c**2)
    span = hi - lo
    pad = 0.05 * span + 1e-6 * max(1.0, abs(lo), abs(hi))
    a, b = lo - pad, hi + pad
    pts = [np.linspace(a, b, n_scan)]
    # the defect varies on the scale kappa/g near each Lorentzian center
    if params.g_mb > 0:
        center = -params.delta_m0 / params.g_mb
        width = params.kappa_m / params.g_mb
        pts.append(np.linspace(center - 20 * width, center + 20 * width, 1601))
    if params.g_cb > 0:
        center = params.delta_c0 / params.g_cb
        width = params.kappa_c / params.g_cb
        pts.append(np.linspace(center - 20 * width, center + 20 * width, 1601))
    q = np.unique(np.concatenate(pts))
    return q[(q >= a) & (q <= b)]


def _bisect(params, q_lo, q_hi, d_lo, d_hi):
    for _ in range(200):
        mid = 0.5 * (q_lo + q_hi)
        if q_hi - q_lo <= BISECT_TOL * max(1.0, abs(mid)):
            break
        d_mid = _defect(params, mid)
        if d_mid == 0.0:
            return mid
        if d_lo * d_mid < 0:
            q_hi, d_hi = mid, d_mid
        else:
            q_lo, d_lo = mid, d_mid
    return 0.5 * (q_lo + q_hi)


def _polish(params, q):
    for _ in range(3):
        d = _defect(params, q)
        dp = _defect_derivative(params, q)
        if dp == 0.0:
            break
        step = d / dp
        if not np.isfinite(step):
            break
        q = q - step
        if abs(step) <= 1e-16 * max(1.0, abs(q)):
            break
    return q


def _track_default_root(params: SystemParams, n_steps: int = 100) -> float:
    """Follow the root connected to q=0 while the couplings ramp from 0 to full."""
    q = 0.0
    t_prev = 0.0
    t = 1.0 / n_steps
    step = 1.0 / n_steps
    while t_prev < 1.0:
        g_cb, g_mb = t * params.g_cb, t * params.g_mb
        ok, q_new = _newton_at(params, q, g_cb, g_mb)
        if ok:
            q, t_prev = q_new, t
            t = min(1.0, t + step)
        else:
            step *= 0.5
            if step < 1e-6:
                return q
            t = min(1.0, t_prev + step)
    return q


def _newton_at(params, q0, g_cb, g_mb):
    q = q0
    for _ in range(50):
        d = _defect(params, q, g_cb, g_mb)
        dp = _defect_derivative(params, q, g_cb, g_mb)
        if dp == 0.0 or not np.isfinite(dp):
            return False, q0
        q_next = q - d / dp
        if not np.isfinite(q_next):
            return False, q0
        if abs(q_next - q) <= 1e-13 * max(1.0, abs(q_next)):
            return True, q_next
        q = q_next
    return False, q0


def solve_steady_state(params: SystemParams, n_scan: int = 4001) -> list[SteadyState]:
    """All steady-state branches, sorted by q_s.

    The branch continuously connected to the uncoupled root q=0 carries
    ``is_default=True``.  Raises BracketError if the sign scan finds no root.
    """
    grid = _scan_grid(params, n_scan)
    d = _defect(params, grid)
    roots = []
    exact = grid[d == 0.0]
    roots.extend(float(q) for q in exact)
    sign_change = np.nonzero(d[:-1] * d[1:] < 0)[0]
    for i in sign_change:
        q = _bisect(params, grid[i], grid[i + 1], d[i], d[i + 1])
        roots.append(_polish(params, q))
    if not roots:
        raise BracketError(
            "no steady-state root found in scan bracket",
            diagnostics={
                "bracket": (float(grid[0]), float(grid[-1])),
                "n_points": int(grid.size),
                "min_abs_defect": float(np.min(np.abs(d))),
            },
        )
    roots = sorted(roots)
    merged = [roots[0]]
    for q in roots[1:]:
        if abs(q - merged[-1]) > 1e-10 * max(1.0, abs(q)):
            merged.append(q)

    if len(merged) == 1:
        default_idx = 0
    else:
        q_track = _track_default_root(params)
        default_idx = int(np.argmin([abs(q - q_track) for q in merged]))

    out = []
    for k, q in enumerate(merged):
        c_s, m_s, delta_c, delta_m = _amplitudes(params, q)
        out.append(
            SteadyState(
                q_s=float(q),
                p_s=0.0,
                c_s=complex(c_s),
                m_s=complex(m_s),
                delta_c=float(delta_c),
                delta_m=float(delta_m),
                residual=float(abs(_defect(params, q))),
                branch_id=k,
                is_default=(k == default_idx),
            )
        )
    return out


def default_steady_state(params: SystemParams, n_scan: int = 4001) -> SteadyState:
    """The branch continuously connected to the uncoupled root."""
    for ss in solve_steady_state(params, n_scan):
        if ss.is_default:
            return ss
    raise BracketError("no default branch flagged")  # pragma: no cover


def steady_state_residuals(params: SystemParams, ss: SteadyState) -> dict:
    """Re-substitution defects of the three fixed-point equations (relative)."""
    c_ref = params.eps_L / (1j * ss.delta_c + params.kappa_c)
    m_ref = params.omega_rabi / (1j * ss.delta_m + params.kappa_m)
    f = (params.g_cb * abs(ss.c_s) ** 2 - params.g_mb * abs(ss.m_s) ** 2) / params.omega_b
    return {
        "q": abs(ss.q_s - f) / max(1.0, abs(ss.q_s)),
        "c": abs(ss.c_s - c_ref) / max(1.0, abs(c_ref)),
        "m": abs(ss.m_s - m_ref) / max(1.0, abs(m_ref)),
    }


def effective_couplings(
    params: SystemParams, ss: SteadyState, rotate_gauge: bool = True
) -> EffectiveCouplings:
    """G_cb = sqrt(2) g_cb c_s and G_mb = sqrt(2) g_mb m_s.

    With ``rotate_gauge`` the pump phases are absorbed so both couplings come
    out real and non-negative; spectra are invariant under this rotation.
    """
    c_s = abs(ss.c_s) if rotate_gauge else ss.c_s
    m_s = abs(ss.m_s) if rotate_gauge else ss.m_s
    root2 = np.sqrt(2.0)
    return EffectiveCouplings(
        G_cb=complex(root2 * params.g_cb * c_s),
        G_mb=complex(root2 * params.g_mb * m_s),
    )


def effective_state(
    eff: EffectiveSettings | None = None,
    *,
    delta_c: float | None = None,
    delta_m: float | None = None,
    G_cb: complex = 0.0,
    G_mb: complex = 0.0,
) -> tuple[SteadyState, EffectiveCouplings]:
    """Working point with directly prescribed detunings and couplings.

    This is the fixed-effective evaluation mode: the returned SteadyState is
    only a carrier for (delta_c, delta_m); no fixed point is solved.
    """
    if eff is not None:
        delta_c, delta_m, G_cb, G_mb = eff.delta_c, eff.delta_m, eff.G_cb, eff.G_mb
    if delta_c is None or delta_m is None:
        raise ValueError("effective_state needs delta_c and delta_m")
    ss = SteadyState(
        q_s=0.0,
        p_s=0.0,
        c_s=0.0j,
        m_s=0.0j,
        delta_c=float(delta_c),
        delta_m=float(delta_m),
        residual=0.0,
    )
    return ss, EffectiveCouplings(G_cb=complex(G_cb), G_mb=complex(G_mb))
