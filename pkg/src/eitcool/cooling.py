"""Cooling rate, quantum cooling limit, and final phonon number.

Analytics:
    gamma_c = g^2 [S_FF(+omega_m) - S_FF(-omega_m)]   (cooling rate)
    n_c     = S_FF(-omega_m) / [S_FF(+omega_m) - S_FF(-omega_m)]
    n_f     = (gamma_m n_m + gamma_c n_c) / (gamma_m + gamma_c)
The independent cross-check integrates the phonon rate equations: a
birth-death chain with per-state rates
    up   from n: (n+1) (g^2 S_FF(-omega_m) + gamma_m n_m)
    down from n:  n    (g^2 S_FF(+omega_m) + gamma_m (n_m + 1))
whose first moment relaxes exponentially to n_f at rate gamma_c + gamma_m.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DegenerateSpectrum, ParameterError, TruncationTooSmall
from .params import SystemParams
from .spectrum import eval_S_FF
from .steady_state import SteadyState

TAIL_LIMIT = 1e-6        # max allowed top-state occupation during a run


@dataclass(frozen=True)
class CoolingFigures:
    s_plus: float        # S_FF(+omega_m), drives cooling
    s_minus: float       # S_FF(-omega_m), drives heating
    gamma_c: float       # net optical cooling rate (omega_m units)
    n_limit: float       # quantum cooling limit n_c
    n_final: float       # steady-state mean phonon number n_f

    @property
    def flags(self) -> tuple[str, ...]:
        out = []
        if self.gamma_c < 0:
            out.append("negative-cooling")
        if not math.isfinite(self.n_final):
            out.append("no-steady-state")
        return tuple(out)

    @property
    def negative_cooling(self) -> bool:
        return self.gamma_c < 0


@dataclass(frozen=True)
class FockDistribution:
    """Truncated phonon number distribution P_0 .. P_n_max."""

    probs: np.ndarray
    n_max: int

    def __post_init__(self):
        if len(self.probs) != self.n_max + 1:
            raise ParameterError(
                f"probs has length {len(self.probs)}, expected n_max + 1 = {self.n_max + 1}")
        if np.any(self.probs < -1e-12):
            raise ParameterError("negative probabilities in FockDistribution")
        total = float(np.sum(self.probs))
        if abs(total - 1.0) > 1e-6:
            raise ParameterError(f"probabilities sum to {total}, expected 1 within 1e-6")

    def mean(self) -> float:
        return float(np.arange(self.n_max + 1) @ self.probs)

    @property
    def tail_mass(self) -> float:
        return float(self.probs[-1])


def thermal_distribution(n_mean: float, n_max: int) -> FockDistribution:
    """Thermal (geometric) distribution truncated at n_max and renormalized."""
    if n_mean < 0:
        raise ParameterError(f"n_mean must be >= 0, got {n_mean}")
    n = np.arange(n_max + 1)
    if n_mean == 0:
        probs = np.zeros(n_max + 1)
        probs[0] = 1.0
    else:
        q = n_mean / (1.0 + n_mean)
        probs = np.exp(n * math.log(q))
        probs /= probs.sum()
    return FockDistribution(probs=probs, n_max=n_max)


def cooling_figures(p: SystemParams, ss: SteadyState) -> CoolingFigures:
    """Evaluate the closed-form cooling figures at one parameter point.

    Heating-dominated points (s_plus < s_minus) come back flagged, not as
    errors; only an exactly degenerate spectrum raises.
    """
    g = ss.g_eff
    s_plus = eval_S_FF(p.omega_m, p)
    s_minus = eval_S_FF(-p.omega_m, p)
    if s_plus == s_minus:
        raise DegenerateSpectrum(
            f"S_FF(+omega_m) = S_FF(-omega_m) = {s_plus:g}; cooling limit undefined")
    if g**2 * max(s_plus, s_minus) > 0.1 * p.kappa1:
        warnings.warn(
            "weak-coupling assumption strained: g^2*max(S_FF) = "
            f"{g**2 * max(s_plus, s_minus):.3g} > 0.1*kappa1", stacklevel=2)
    gamma_c = g**2 * (s_plus - s_minus)
    n_limit = s_minus / (s_plus - s_minus)
    total = p.gamma_m + gamma_c
    if total > 0:
        # gamma_c*n_c = g^2*s_minus identically, including gamma_c < 0
        n_final = (p.gamma_m * p.n_thermal + g**2 * s_minus) / total
    else:
        n_final = math.inf  # runaway heating, no steady state
    return CoolingFigures(s_plus=s_plus, s_minus=s_minus, gamma_c=gamma_c,
                          n_limit=n_limit, n_final=n_final)


def evolve_mean_phonon(p: SystemParams, ss: SteadyState, n0: float, t):
    """Closed-form mean phonon number n_f + (n0 - n_f) exp(-(gamma_c+gamma_m) t).

    The first-moment equation of the rate equations is exactly closed for
    the linear-in-n rates, so this is exact, not an approximation. t may
    be a scalar or an ndarray.
    """
    fig = cooling_figures(p, ss)
    rate = fig.gamma_c + p.gamma_m
    if rate <= 0:
        raise ParameterError(f"gamma_c + gamma_m must be > 0, got {rate:g}")
    t = np.asarray(t, dtype=float)
    result = fig.n_final + (n0 - fig.n_final) * np.exp(-rate * t)
    return float(result) if result.ndim == 0 else result


def rate_generator(p: SystemParams, ss: SteadyState, n_max: int) -> np.ndarray:
    """Truncated birth-death generator (columns = source states).

    The top state keeps its full outflow, so its column sums negative:
    probability escaping past n_max is lost, which the tail guard bounds.
    """
    fig = cooling_figures(p, ss)
    g2 = ss.g_eff**2
    n = np.arange(n_max + 1, dtype=float)
    up = (n + 1.0) * (g2 * fig.s_minus + p.gamma_m * p.n_thermal)
    down = n * (g2 * fig.s_plus + p.gamma_m * (p.n_thermal + 1.0))
    L = np.zeros((n_max + 1, n_max + 1))
    L[np.arange(n_max + 1), np.arange(n_max + 1)] = -(up + down)
    L[np.arange(1, n_max + 1), np.arange(n_max)] = up[:-1]      # n -> n+1
    L[np.arange(n_max), np.arange(1, n_max + 1)] = down[1:]     # n -> n-1
    return L


def integrate_rate_equations(p: SystemParams, ss: SteadyState,
                             initial: FockDistribution, t_final: float,
                             n_max: int | None = None) -> FockDistribution:
    """Integrate the truncated phonon rate equations to t_final.

    initial must be normalized with negligible tail mass; raises
    TruncationTooSmall if the top-state occupation exceeds 1e-6 at any
    checkpoint or the mean grows past n_max/2 (runaway heating).
    """
    if n_max is None:
        n_max = initial.n_max
    if n_max != initial.n_max:
        raise ParameterError(
            f"n_max = {n_max} disagrees with initial distribution (n_max = {initial.n_max})")
    if initial.tail_mass > TAIL_LIMIT:
        raise TruncationTooSmall(
            f"initial tail mass {initial.tail_mass:.3g} exceeds {TAIL_LIMIT:g}")
    if t_final < 0:
        raise ParameterError(f"t_final must be >= 0, got {t_final}")
    if t_final == 0:
        return initial

    L = rate_generator(p, ss, n_max)
    ns = np.arange(n_max + 1, dtype=float)

    def rhs(_t, y):
        return L @ y

    def tail_overflow(_t, y):
        return y[-1] - TAIL_LIMIT

    def mean_runaway(_t, y):
        return ns @ y - 0.5 * n_max

    tail_overflow.terminal = True
    mean_runaway.terminal = True

    # Explicit adaptive RK; fastest rate ~ n_max * max per-phonon rate sets
    # the stability scale, tolerances set the accuracy.
    max_rate = float(np.abs(L.diagonal()).max())
    sol = solve_ivp(rhs, (0.0, t_final), initial.probs, method="DOP853",
                    rtol=1e-9, atol=1e-13,
                    first_step=min(0.1 / max_rate, t_final) if max_rate > 0 else None,
                    events=(tail_overflow, mean_runaway))
    if not sol.success:
        raise TruncationTooSmall(f"integration failed: {sol.message}")
    if sol.t_events[0].size:
        raise TruncationTooSmall(
            f"tail mass exceeded {TAIL_LIMIT:g} at t = {sol.t_events[0][0]:.3g}; "
            "increase n_max")
    if sol.t_events[1].size:
        raise TruncationTooSmall(
            f"mean phonon number passed n_max/2 at t = {sol.t_events[1][0]:.3g}; "
            "heating-dominated parameters diverge")
    probs = np.clip(sol.y[:, -1], 0.0, None)
    return FockDistribution(probs=probs, n_max=n_max)
