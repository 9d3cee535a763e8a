"""Exception types shared across the package."""


class OmmsimError(Exception):
    """Base class for all ommsim errors."""


class ConfigError(OmmsimError):
    """Invalid parameters, config documents, or CLI arguments (exit code 2)."""


class GridError(ConfigError):
    """Invalid sampling grid: too small, non-uniform, or inconsistent with the material volume."""


class PoleError(OmmsimError):
    """A response denominator vanished or the sideband system is singular (exit code 3).

    Carries the offending block name and, when known, the probe detuning.
    """

    def __init__(self, block, delta=None, context=None):
        self.block = block
        self.delta = delta
        self.context = context
        msg = f"pole in {block}"
        if delta is not None:
            msg += f" at delta={delta!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class BracketError(OmmsimError):
    """The steady-state root scan found no sign change (exit code 3)."""

    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)
