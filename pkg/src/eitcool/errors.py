"""Exception types shared across the package.

Validation problems (bad config, bad parameter values) map to CLI exit
code 2, numerical failures to exit code 3.
"""


class ValidationError(ValueError):
    """Base for input problems: bad values, bad config, unit conflicts."""


class ParameterError(ValidationError):
    """A parameter violates its invariant (sign, finiteness, range)."""


class ConfigError(ValidationError):
    """Config file or flag set is unusable; message names the offending key."""


class NumericsError(RuntimeError):
    """Base for failures of the computation itself."""


class ZeroDenominator(NumericsError):
    """Steady-state denominator vanishes (kappa2 = delta2 = 0 with J > 0)."""


class PoleAtDip(NumericsError):
    """A(omega) has a pole: kappa2 = 0 and omega = delta2 with J > 0."""


class DegenerateSpectrum(NumericsError):
    """S_FF(+omega_m) = S_FF(-omega_m) exactly; cooling limit undefined."""


class TruncationTooSmall(NumericsError):
    """Fock-space truncation overflowed (tail mass above threshold)."""


class UnsupportedRegime(NumericsError):
    """Requested point lies in the deferred regime delta1 > omega_m."""
