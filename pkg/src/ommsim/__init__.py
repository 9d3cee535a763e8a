"""ommsim: steady states, probe response and four-wave mixing of a driven
cavity-magnon-mechanics model, with an independent sideband-oracle check."""

__version__ = "0.1.0"

from .errors import BracketError, ConfigError, GridError, OmmsimError, PoleError
from .params import (
    EFFECTIVE_KEYS,
    EffectiveSettings,
    PhysicalDrive,
    SystemParams,
    normalize_drive,
    split_config,
)
from .steady import (
    EffectiveCouplings,
    SteadyState,
    default_steady_state,
    effective_couplings,
    effective_state,
    solve_steady_state,
    steady_state_residuals,
)
from .stability import StabilityReport, assess_stability, drift_matrix, drift_matrix_elements
from .response import (
    AuxiliaryBlocks,
    ResponsePoint,
    auxiliaries,
    probe_amplitude,
    response_point,
    spectrum,
    spectrum_csv,
    stokes_amplitude,
    write_spectrum_csv,
)
from .oracle import FluctuationAmplitudes, SidebandSystem
from .verify import DiscrepancyReport, compare
from .coupling import (
    MaterialParams,
    ModeShapeGrid,
    coupling_report,
    magnon_phonon_coupling,
    read_mode_files,
    strain_integrand,
    volume_integral,
    write_mode_files,
)
from .sweep import (
    FeatureSet,
    SweepAxis,
    SweepResult,
    SweepSpec,
    detect_features,
    export,
    parse_csv,
    parse_json,
    run_sweep,
    write_outputs,
)

__all__ = [
    "__version__",
    "BracketError",
    "ConfigError",
    "GridError",
    "OmmsimError",
    "PoleError",
    "EFFECTIVE_KEYS",
    "EffectiveSettings",
    "PhysicalDrive",
    "SystemParams",
    "normalize_drive",
    "split_config",
    "EffectiveCouplings",
    "SteadyState",
    "default_steady_state",
    "effective_couplings",
    "effective_state",
    "solve_steady_state",
    "steady_state_residuals",
    "StabilityReport",
    "assess_stability",
    "drift_matrix",
    "drift_matrix_elements",
    "AuxiliaryBlocks",
    "ResponsePoint",
    "auxiliaries",
    "probe_amplitude",
    "response_point",
    "spectrum",
    "spectrum_csv",
    "stokes_amplitude",
    "write_spectrum_csv",
    "FluctuationAmplitudes",
    "SidebandSystem",
    "DiscrepancyReport",
    "compare",
    "MaterialParams",
    "ModeShapeGrid",
    "coupling_report",
    "magnon_phonon_coupling",
    "read_mode_files",
    "strain_integrand",
    "volume_integral",
    "write_mode_files",
    "FeatureSet",
    "SweepAxis",
    "SweepResult",
    "SweepSpec",
    "detect_features",
    "export",
    "parse_csv",
    "parse_json",
    "run_sweep",
    "write_outputs",
]
