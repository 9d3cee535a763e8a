"""Closed-form linear response: probe amplitude, Stokes amplitude, output field.

For a probe detuned by delta from the pump, the anti-Stokes amplitude c_minus
sets the transmitted probe quadratures eps_T = 2 kappa_c c_minus / eps_p and
the Stokes amplitude c_plus sets the four-wave-mixing intensity
|2 kappa_c c_plus / eps_p|^2.

Squared couplings: wherever a coupling enters paired with its conjugate
(chi12, alpha12 and the -i*omega_b*G_cb^2 denominator terms) the physically
consistent reading is |G|^2; the c_plus numerator carries the unconjugated
G_cb^2.  The c_plus numerator factor is alpha2, not theta_p (see
deviations.md); both points are fixed against the independent sideband solver
in ommsim.oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridError, PoleError
from .params import SystemParams
from .steady import EffectiveCouplings, SteadyState

POLE_EPS = 1e-30

CSV_HEADER = "delta,re_epsT,im_epsT,lambda,lambda_tilde,fwm"


@dataclass(frozen=True)
class AuxiliaryBlocks:
    """Denominator blocks and susceptibility combinations at one detuning."""

    omega1m: complex
    omega2m: complex
    omega1c: complex
    omega2c: complex
    chi1: complex
    chi2: complex
    chi12: complex
    alpha1: complex
    alpha2: complex
    alpha12: complex
    theta_n: complex
    theta_p: complex


@dataclass(frozen=True)
class ResponsePoint:
    """Response quantities at one probe-pump detuning.

    lam / lam_tilde are the in-phase and out-of-phase output quadratures
    (the ``lambda`` / ``lambda_tilde`` CSV columns), fwm the four-wave-mixing
    intensity.
    """

    delta: float
    c_minus: complex
    c_plus: complex
    eps_T: complex
    lam: float
    lam_tilde: float
    fwm: float


def _checked_inverse(z: complex, block: str, delta: float) -> complex:
    if abs(z) < POLE_EPS:
        raise PoleError(block, delta)
    return 1.0 / z


def auxiliaries(
    params: SystemParams, ss: SteadyState, eff: EffectiveCouplings, delta: float
) -> AuxiliaryBlocks:
    """Evaluate every auxiliary block at probe detuning ``delta``."""
    kc, km = params.kappa_c, params.kappa_m
    dc, dm = ss.delta_c, ss.delta_m
    omega1m = km - 1j * (dm + delta)
    omega2m = km + 1j * (dm - delta)
    omega1c = kc - 1j * (dc + delta)
    omega2c = kc + 1j * (dc - delta)

    inv_o1m = _checked_inverse(omega1m, "omega1m", delta)
    inv_o2m = _checked_inverse(omega2m, "omega2m", delta)
    chi1 = inv_o1m - inv_o2m  # = (omega2m - omega1m) / (omega1m omega2m)
    chi2 = _checked_inverse(omega1c, "omega1c", delta)
    alpha2 = _checked_inverse(np.conj(omega2c), "omega2c*", delta)
    alpha1 = np.conj(inv_o2m) - np.conj(inv_o1m)

    g_cb2 = abs(eff.G_cb) ** 2
    g_mb2 = abs(eff.G_mb) ** 2
    chi12 = g_mb2 * chi1 + g_cb2 * chi2
    alpha12 = g_mb2 * alpha1 + g_cb2 * alpha2
    theta_n = delta * params.gamma_b - params.omega_b * chi12
    theta_p = delta * params.gamma_b + params.omega_b * alpha12
    return AuxiliaryBlocks(
        omega1m=complex(omega1m),
        omega2m=complex(omega2m),
        omega1c=complex(omega1c),
        omega2c=complex(omega2c),
        chi1=complex(chi1),
        chi2=complex(chi2),
        chi12=complex(chi12),
        alpha1=complex(alpha1),
        alpha2=complex(alpha2),
        alpha12=complex(alpha12),
        theta_n=complex(theta_n),
        theta_p=complex(theta_p),
    )


def probe_amplitude(
    aux: AuxiliaryBlocks, eff: EffectiveCouplings, params: SystemParams, delta: float
) -> complex:
    """Anti-Stokes (probe) amplitude c_minus."""
    wb = params.omega_b
    numerator = wb * wb - delta * delta - 1j * aux.theta_n
    denominator = numerator * aux.omega2c - 1j * wb * abs(eff.G_cb) ** 2
    if abs(denominator) < POLE_EPS:
        raise PoleError("probe denominator", delta)
    return numerator * params.eps_p / denominator


def stokes_amplitude(
    aux: AuxiliaryBlocks, eff: EffectiveCouplings, params: SystemParams, delta: float
) -> complex:
    """Stokes amplitude c_plus; zero without optomechanical coupling."""
    wb = params.omega_b
    denominator = (wb * wb - delta * delta + 1j * aux.theta_p) * np.conj(aux.omega1c) - (
        1j * wb * abs(eff.G_cb) ** 2
    )
    if abs(denominator) < POLE_EPS:
        raise PoleError("stokes denominator", delta)
    return 1j * eff.G_cb**2 * wb * aux.alpha2 * params.eps_p / denominator


def response_point(
    params: SystemParams, ss: SteadyState, eff: EffectiveCouplings, delta: float
) -> ResponsePoint:
    """Full response at one probe detuning."""
    aux = auxiliaries(params, ss, eff, delta)
    c_minus = probe_amplitude(aux, eff, params, delta)
    c_plus = stokes_amplitude(aux, eff, params, delta)
    eps_t = 2.0 * params.kappa_c * c_minus / params.eps_p
    fwm = abs(2.0 * params.kappa_c * c_plus / params.eps_p) ** 2
    return ResponsePoint(
        delta=float(delta),
        c_minus=complex(c_minus),
        c_plus=complex(c_plus),
        eps_T=complex(eps_t),
        lam=float(eps_t.real),
        lam_tilde=float(eps_t.imag),
        fwm=float(fwm),
    )


def spectrum(
    params: SystemParams, ss: SteadyState, eff: EffectiveCouplings, deltas
) -> list[ResponsePoint]:
    """Response at each detuning of a strictly increasing grid."""
    deltas = np.asarray(deltas, dtype=float)
    if deltas.size and not np.all(np.diff(deltas) > 0):
        raise GridError("delta grid must be strictly increasing")
    return [response_point(params, ss, eff, float(d)) for d in deltas]


def spectrum_csv(points: list[ResponsePoint]) -> str:
    """CSV document (full double precision, row order = input order)."""
    lines = [CSV_HEADER]
    for p in points:
        lines.append(
            ",".join(
                repr(float(v))
                for v in (p.delta, p.eps_T.real, p.eps_T.imag, p.lam, p.lam_tilde, p.fwm)
            )
        )
    return "\n".join(lines) + "\n"


def write_spectrum_csv(points: list[ResponsePoint], path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(spectrum_csv(points))
