"""Fluctuation spectrum of the optical force on the mechanical resonator.

The two coupled cavities respond to the force operator F = a1^dag + a1
through
    A(omega) = kappa1 - i(omega - delta1) + J^2 / (kappa2 - i(omega - delta2))
    S_FF(omega) = 1/A + 1/A* = 2 Re A / |A|^2
For J > 0 the single Lorentzian splits into two peaks at the normal-mode
detunings with an interference dip at omega = delta2 (near zero for small
kappa2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleAtDip
from .params import SystemParams


@dataclass(frozen=True)
class NormalModes:
    """Eigen-detunings of the diagonalized two-cavity Hamiltonian."""

    delta_prime_1: float     # upper eigen-detuning (right spectrum peak)
    delta_prime_2: float     # lower eigen-detuning (left peak)
    mixing_theta: float      # rotation angle, tan(2*theta) = 2J/(d1 - d2)


@dataclass(frozen=True)
class Landmarks:
    dip_position: float                    # = delta2
    peak_positions: tuple[float, float]    # (delta_prime_2, delta_prime_1)


@dataclass(frozen=True)
class SpectrumCurve:
    omegas: np.ndarray       # strictly increasing sample grid
    values: np.ndarray       # S_FF at each sample (1/omega_m)
    landmarks: Landmarks


def response_A(omega, p: SystemParams):
    """Complex response A(omega); scalar or ndarray omega.

    Raises PoleAtDip at the kappa2 = 0, omega = delta2 pole of the J^2
    term (eval_S_FF returns the analytic limit 0 there instead).
    """
    omega = np.asarray(omega, dtype=float)
    if p.coupling_J > 0 and p.kappa2 == 0 and np.any(omega == p.delta2):
        raise PoleAtDip("A(omega) has a pole at omega = delta2 for kappa2 = 0")
    a = p.kappa1 - 1j * (omega - p.delta1)
    if p.coupling_J > 0:
        a = a + p.coupling_J**2 / (p.kappa2 - 1j * (omega - p.delta2))
    a = np.asarray(a)
    return complex(a) if a.ndim == 0 else a


def eval_S_FF(omega, p: SystemParams):
    """S_FF(omega) = 2 Re A / |A|^2; scalar or ndarray omega.

    At the kappa2 = 0 pole the analytic limit 0 is returned.
    """
    omega_arr = np.asarray(omega, dtype=float)
    scalar = omega_arr.ndim == 0
    omega_arr = np.atleast_1d(omega_arr)

    pole = (p.coupling_J > 0 and p.kappa2 == 0)
    at_pole = (omega_arr == p.delta2) if pole else np.zeros(omega_arr.shape, dtype=bool)
    safe = np.where(at_pole, omega_arr + 1.0, omega_arr)  # dummy shift off the pole
    a = p.kappa1 - 1j * (safe - p.delta1)
    if p.coupling_J > 0:
        a = a + p.coupling_J**2 / (p.kappa2 - 1j * (safe - p.delta2))
    s = 2.0 * a.real / (a.real**2 + a.imag**2)
    s = np.where(at_pole, 0.0, s)
    return float(s[0]) if scalar else s


def normal_modes(p: SystemParams) -> NormalModes:
    """Normal-mode detunings and mixing angle of the optical Hamiltonian."""
    mean = 0.5 * (p.delta1 + p.delta2)
    split = math.hypot(p.coupling_J, 0.5 * (p.delta1 - p.delta2))
    if p.delta1 == p.delta2:
        theta = math.pi / 4 if p.coupling_J > 0 else 0.0
    else:
        theta = 0.5 * math.atan(2.0 * p.coupling_J / (p.delta1 - p.delta2))
    return NormalModes(delta_prime_1=mean + split, delta_prime_2=mean - split,
                       mixing_theta=theta)


def sample_spectrum(p: SystemParams, omega_range: tuple[float, float],
                    n_points: int) -> SpectrumCurve:
    """Uniformly sampled S_FF over [omega_lo, omega_hi]."""
    lo, hi = omega_range
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    if not lo < hi:
        raise ValueError(f"need omega_lo < omega_hi, got [{lo}, {hi}]")
    omegas = np.linspace(lo, hi, n_points)
    values = eval_S_FF(omegas, p)
    nm = normal_modes(p)
    marks = Landmarks(dip_position=p.delta2,
                      peak_positions=(nm.delta_prime_2, nm.delta_prime_1))
    return SpectrumCurve(omegas=omegas, values=values, landmarks=marks)
