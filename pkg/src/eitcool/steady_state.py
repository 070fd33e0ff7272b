"""Classical steady state of the driven double-cavity system.

Closed forms (units of omega_m):
    alpha1 = eps / (kappa1 + i*delta1 + J^2/(kappa2 + i*delta2))
    alpha2 = -i*J*alpha1 / (kappa2 + i*delta2)
    beta   = i*g0*|alpha1|^2 / (i*omega_m + gamma_m)
The enhanced coupling is g = g0*|alpha1| (drive phase chosen so alpha1 is
effectively real; only |alpha1| feeds the downstream g^2 formulas).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroDenominator
from .params import SystemParams


@dataclass(frozen=True)
class SteadyState:
    alpha1: complex          # cavity-1 amplitude
    alpha2: complex          # cavity-2 amplitude
    beta: complex            # mechanical displacement amplitude
    g_eff: float             # enhanced coupling g (omega_m units)
    delta1_bare: float       # back-computed bare detuning Delta1^(0)


def solve_steady_state(p: SystemParams) -> SteadyState:
    """Solve the zero-derivative point of the driven classical equations."""
    d2 = p.kappa2 + 1j * p.delta2
    if p.coupling_J > 0:
        if d2 == 0:
            raise ZeroDenominator("kappa2 = delta2 = 0 with J > 0")
        denom = p.kappa1 + 1j * p.delta1 + p.coupling_J**2 / d2
    else:
        denom = p.kappa1 + 1j * p.delta1
    if denom == 0:
        raise ZeroDenominator("alpha1 denominator vanishes")

    alpha1 = p.drive_eps / denom
    alpha2 = -1j * p.coupling_J * alpha1 / d2 if p.coupling_J > 0 else 0j
    beta = 1j * p.g0 * abs(alpha1) ** 2 / (1j * p.omega_m + p.gamma_m)
    g_eff = p.g_fixed if p.g_fixed is not None else p.g0 * abs(alpha1)
    # Delta1 is the effective detuning; undo the static shift for reporting.
    delta1_bare = p.delta1 + p.g0 * (2.0 * beta.real)
    return SteadyState(alpha1=alpha1, alpha2=alpha2, beta=beta,
                       g_eff=g_eff, delta1_bare=delta1_bare)
