"""Parameter model and unit normalization.

Everything internal is expressed in units of the mechanical frequency
(omega_m = 1); the optional SI layer (frequency in Hz, temperature in K,
quality factor) exists only to derive the dimensionless ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Mapping

from scipy.constants import hbar, k as k_B

from .errors import ConfigError, ParameterError

# Rate/detuning fields of SystemParams, in config-key naming. Keys without
# an _hz suffix are in units of omega_m; <key>_hz variants are in Hz
# (angular) and are divided by omega_m_hz.
RATE_KEYS = ("kappa1", "kappa2", "delta1", "delta2", "J", "g0", "eps",
             "gamma_m", "g_fixed")
SI_KEYS = ("omega_m_hz", "temperature_K", "quality_Q")
CONFIG_KEYS = RATE_KEYS + SI_KEYS + ("n_thermal",) + tuple(
    k + "_hz" for k in RATE_KEYS)


@dataclass(frozen=True)
class SIEnvironment:
    """Lab-frame description of the mechanical mode and its bath.

    omega_m_hz is the angular frequency (2*pi times the linear frequency).
    """

    omega_m_hz: float
    temperature_K: float
    quality_Q: float

    def __post_init__(self):
        for name in ("omega_m_hz", "temperature_K", "quality_Q"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ParameterError(f"{name} must be finite and > 0, got {v!r}")


@dataclass(frozen=True)
class SystemParams:
    """All system rates and detunings in units of omega_m.

    delta1 is the *effective* detuning of the driven cavity (the static
    radiation-pressure shift is already absorbed); the bare detuning is a
    derived output of the steady-state solve, never an input.

    g_fixed = None means the enhanced coupling is g0*|alpha1| from the
    drive; a float pins g directly (fixed-g protocol).
    """

    kappa1: float               # decay rate of the driven cavity
    kappa2: float               # decay rate of the auxiliary cavity
    delta1: float               # effective detuning of cavity 1
    delta2: float               # detuning of cavity 2
    coupling_J: float           # inter-cavity coupling
    g0: float = 0.0             # single-photon optomechanical coupling
    drive_eps: float = 0.0      # drive amplitude |eps|
    gamma_m: float = 0.0        # mechanical damping
    n_thermal: float = 0.0      # bath phonon number (dimensionless)
    g_fixed: float | None = None
    omega_m: float = 1.0        # reference unit; 1 by construction

    def __post_init__(self):
        if not (math.isfinite(self.omega_m) and self.omega_m > 0):
            raise ParameterError(f"omega_m must be finite and > 0, got {self.omega_m!r}")
        if not (math.isfinite(self.kappa1) and self.kappa1 > 0):
            raise ParameterError(f"kappa1 must be finite and > 0, got {self.kappa1!r}")
        for name in ("kappa2", "coupling_J", "g0", "drive_eps", "gamma_m",
                     "n_thermal"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ParameterError(f"{name} must be finite and >= 0, got {v!r}")
        for name in ("delta1", "delta2"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")
        if self.g_fixed is not None and not (
                math.isfinite(self.g_fixed) and self.g_fixed >= 0):
            raise ParameterError(f"g_fixed must be finite and >= 0, got {self.g_fixed!r}")

    def with_(self, **kw) -> "SystemParams":
        """Copy with some fields replaced (sweep plumbing)."""
        return replace(self, **kw)


def thermal_occupation(env: SIEnvironment) -> float:
    """Bose occupation n_m = 1/(exp(hbar*omega_m/kB*T) - 1) of the bath."""
    x = hbar * env.omega_m_hz / (k_B * env.temperature_K)
    return 1.0 / math.expm1(x)


def _bose(omega_m_hz: float, temperature_K: float) -> float:
    if not (math.isfinite(omega_m_hz) and omega_m_hz > 0):
        raise ParameterError(f"omega_m_hz must be finite and > 0, got {omega_m_hz!r}")
    if not (math.isfinite(temperature_K) and temperature_K > 0):
        raise ParameterError(f"temperature_K must be finite and > 0, got {temperature_K!r}")
    return 1.0 / math.expm1(hbar * omega_m_hz / (k_B * temperature_K))


def normalize(raw: Mapping[str, float]) -> tuple[SystemParams, SIEnvironment | None]:
    """Build SystemParams from a flat key-value mapping.

    Accepted keys are the config keys: rates/detunings in omega_m units,
    or their `_hz` variants (angular Hz, requires omega_m_hz), plus the SI
    layer. A key given in both unit forms is rejected. gamma_m falls back
    to omega_m/Q, n_thermal to the Bose factor of (omega_m_hz,
    temperature_K); when both a direct value and an SI-derived one are
    available they must agree within 1%.
    """
    unknown = [k for k in raw if k not in CONFIG_KEYS]
    if unknown:
        raise ConfigError(f"unknown key '{unknown[0]}'")

    omega_m_hz = raw.get("omega_m_hz")

    def pick(key: str) -> float | None:
        in_wm, in_hz = raw.get(key), raw.get(key + "_hz")
        if in_wm is not None and in_hz is not None:
            raise ConfigError(f"unit conflict: '{key}' given both in omega_m units and in Hz")
        if in_hz is not None:
            if omega_m_hz is None:
                raise ConfigError(f"'{key}_hz' requires 'omega_m_hz'")
            return in_hz / omega_m_hz
        return in_wm

    vals = {k: pick(k) for k in RATE_KEYS}

    for key in ("kappa1", "kappa2", "delta1", "delta2", "J"):
        if vals[key] is None:
            raise ConfigError(f"missing required key '{key}'")

    quality_Q = raw.get("quality_Q")
    gamma_m = vals["gamma_m"]
    if quality_Q is not None:
        gamma_q = 1.0 / quality_Q  # omega_m/Q in omega_m units
        if gamma_m is None:
            gamma_m = gamma_q
        elif gamma_m > 0 and abs(gamma_m - gamma_q) > 0.01 * gamma_m:
            raise ConfigError(
                "inconsistent keys 'gamma_m' and 'quality_Q': "
                f"{gamma_m:g} vs omega_m/Q = {gamma_q:g} (>1% apart)")
    if gamma_m is None:
        raise ConfigError("missing required key 'gamma_m' (or 'quality_Q')")

    n_thermal = raw.get("n_thermal")
    temperature_K = raw.get("temperature_K")
    if temperature_K is not None and omega_m_hz is not None:
        n_bose = _bose(omega_m_hz, temperature_K)
        if n_thermal is None:
            n_thermal = n_bose
        elif n_thermal > 0 and abs(n_thermal - n_bose) > 0.01 * n_thermal:
            raise ConfigError(
                "inconsistent keys 'n_thermal' and 'temperature_K': "
                f"{n_thermal:g} vs Bose factor {n_bose:g} (>1% apart)")
    if n_thermal is None:
        raise ConfigError("missing required key 'n_thermal' (or 'temperature_K' with 'omega_m_hz')")

    env = None
    if omega_m_hz is not None and temperature_K is not None and quality_Q is not None:
        env = SIEnvironment(omega_m_hz, temperature_K, quality_Q)

    p = SystemParams(
        kappa1=vals["kappa1"], kappa2=vals["kappa2"],
        delta1=vals["delta1"], delta2=vals["delta2"],
        coupling_J=vals["J"],
        g0=vals["g0"] or 0.0, drive_eps=vals["eps"] or 0.0,
        gamma_m=gamma_m, n_thermal=n_thermal, g_fixed=vals["g_fixed"])
    return p, env


def denormalize(p: SystemParams, env: SIEnvironment) -> dict[str, float]:
    """Express a SystemParams back in Hz keys (inverse of normalize)."""
    out: dict[str, float] = {"omega_m_hz": env.omega_m_hz}
    field_by_key = {"kappa1": p.kappa1, "kappa2": p.kappa2, "delta1": p.delta1,
                    "delta2": p.delta2, "J": p.coupling_J, "g0": p.g0,
                    "eps": p.drive_eps, "gamma_m": p.gamma_m,
                    "g_fixed": p.g_fixed}
    for key, v in field_by_key.items():
        if v is not None:
            out[key + "_hz"] = v * env.omega_m_hz
    out["n_thermal"] = p.n_thermal
    return out


def read_config(path: str) -> dict[str, float]:
    """Parse a flat `key = value` config file (UTF-8, # comments)."""
    values: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
            if key in values:
                raise ConfigError(f"{path}:{lineno}: duplicate key '{key}'")
            try:
                values[key] = float(text.strip())
            except ValueError:
                raise ConfigError(
                    f"{path}:{lineno}: invalid number for key '{key}': {text.strip()!r}") from None
    return values
