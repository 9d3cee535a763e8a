"""Model parameters and drive normalization.

All rates, detunings and amplitudes are expressed in units of the mechanical
frequency omega_b (normalized mode, omega_b = 1 by default).  Physical drive
quantities enter only through :func:`normalize_drive`.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .errors import ConfigError

HBAR = 1.054571817e-34  # J s

#: Config keys that select the working point directly (Table-style effective
#: couplings/detunings) rather than through the bare model parameters.
EFFECTIVE_KEYS = ("delta_c", "delta_m", "G_cb", "G_mb")


@dataclass(frozen=True)
class SystemParams:
    """Normalized model parameters.

    Attributes
    ----------
    omega_b : mechanical frequency, the unit of every other rate.
    kappa_c, kappa_m : cavity and magnon amplitude decay rates.
    gamma_b : mechanical damping rate.
    g_cb, g_mb : bare optomechanical / magnomechanical couplings.
    delta_c0, delta_m0 : bare pump detunings of cavity and magnon mode.
    omega_rabi : magnon drive amplitude.
    eps_L : cavity pump amplitude.
    eps_p : probe amplitude; response ratios are independent of it.
    """

    omega_b: float = 1.0
    kappa_c: float = 0.1
    kappa_m: float = 0.01
    gamma_b: float = 1e-5
    g_cb: float = 0.0
    g_mb: float = 0.0
    delta_c0: float = 0.0
    delta_m0: float = 0.0
    omega_rabi: float = 0.0
    eps_L: float = 0.0
    eps_p: float = 1.0

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"params.{name} must be a finite number, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.omega_b <= 0:
            raise ConfigError("params.omega_b must be > 0")
        if self.kappa_c <= 0 or self.kappa_m <= 0:
            raise ConfigError("params.kappa_c and params.kappa_m must be > 0")
        if self.gamma_b < 0:
            raise ConfigError("params.gamma_b must be >= 0")
        if self.eps_p <= 0:
            raise ConfigError("params.eps_p must be > 0")

    def replace(self, **changes) -> "SystemParams":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}

    @classmethod
    def from_dict(cls, data: dict) -> "SystemParams":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown params field(s): {sorted(unknown)}")
        return cls(**data)


@dataclass(frozen=True)
class EffectiveSettings:
    """Directly prescribed working point: effective detunings and couplings.

    Used by the fixed-effective evaluation mode, where the figure-style
    couplings G_cb, G_mb are set by hand and the self-consistent steady
    state is bypassed.
    """

    delta_c: float
    delta_m: float
    G_cb: complex = 0.0
    G_mb: complex = 0.0

    def to_dict(self) -> dict:
        out = {"delta_c": self.delta_c, "delta_m": self.delta_m}
        for name in ("G_cb", "G_mb"):
            v = getattr(self, name)
            out[name] = v.real if getattr(v, "imag", 0.0) == 0.0 else {"re": v.real, "im": v.imag}
        return out


def split_config(params_dict: dict) -> tuple[SystemParams, EffectiveSettings]:
    """Split a flat ``params`` config object into bare and effective parts.

    The four effective keys (delta_c, delta_m, G_cb, G_mb) ride in the same
    flat object as the SystemParams fields; missing detunings default to
    the bare ones and missing couplings to zero.
    """
    bare = {k: v for k, v in params_dict.items() if k not in EFFECTIVE_KEYS}
    params = SystemParams.from_dict(bare)
    eff = EffectiveSettings(
        delta_c=float(params_dict.get("delta_c", params.delta_c0)),
        delta_m=float(params_dict.get("delta_m", params.delta_m0)),
        G_cb=complex(params_dict.get("G_cb", 0.0)),
        G_mb=complex(params_dict.get("G_mb", 0.0)),
    )
    return params, eff


@dataclass(frozen=True)
class PhysicalDrive:
    """Physical drive quantities (SI units).

    gamma0 : gyromagnetic ratio (Hz/T)
    B0 : drive magnetic-field amplitude (T)
    rho : spin density (1/m^3)
    volume : crystal volume (m^3)
    power_L : laser power (W)
    omega_L : laser angular frequency (rad/s)
    hbar : reduced Planck constant (J s)
    """

    gamma0: float
    B0: float
    rho: float
    volume: float
    power_L: float
    omega_L: float
    hbar: float = HBAR

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"physical.{name} must be a finite number, got {value!r}")
            object.__setattr__(self, name, float(value))
        for name in ("gamma0", "rho", "volume", "omega_L", "hbar"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"physical.{name} must be > 0")
        # zero drive amplitude / power are legitimate inputs
        if self.B0 < 0 or self.power_L < 0:
            raise ConfigError("physical.B0 and physical.power_L must be >= 0")


def normalize_drive(phys: PhysicalDrive, params: SystemParams) -> SystemParams:
    """Convert physical drive quantities to model amplitudes.

    omega_rabi = (sqrt(5)/4) * gamma0 * sqrt(rho * volume) * B0
    eps_L      = sqrt(kappa_c * power_L / (hbar * omega_L))

    kappa_c is taken from ``params`` in whatever unit system the caller keeps
    it in; the caller is responsible for unit consistency.
    """
    n_spins = phys.rho * phys.volume
    omega_rabi = (math.sqrt(5.0) / 4.0) * phys.gamma0 * math.sqrt(n_spins) * phys.B0
    eps_l = math.sqrt(params.kappa_c * phys.power_L / (phys.hbar * phys.omega_L))
    if not (math.isfinite(omega_rabi) and math.isfinite(eps_l)):
        raise ConfigError("normalize_drive produced a non-finite amplitude")
    return params.replace(omega_rabi=omega_rabi, eps_L=eps_l)
