"""Optimal-cooling conditions and brute-force validation sweeps.

The analytic conditions place the heating sideband at the spectrum dip
(delta2 = -omega_m) and the cooling sideband at the upper normal mode
(delta_prime_1 = +omega_m), which ties the coupling to the detuning:
    J = sqrt(2 omega_m (omega_m - delta1)),  delta1 = omega_m - J^2/(2 omega_m).
These maximize/minimize individual spectrum values, not n_f jointly, so
sweeps and grid search treat them as near-optimal candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cooling import CoolingFigures, cooling_figures
from .errors import DegenerateSpectrum, UnsupportedRegime
from .params import SystemParams
from .steady_state import solve_steady_state

MODE_FIXED_G = "fixed-g"
MODE_FROM_DRIVE = "from-drive"


@dataclass(frozen=True)
class OptimalPoint:
    delta2_opt: float            # = -omega_m
    coupling_J: float
    delta1_opt: float            # effective detuning satisfying the J(delta1) tie
    predicted: CoolingFigures


@dataclass(frozen=True)
class SweepRow:
    coupling_J: float
    delta1: float
    g: float
    figures: CoolingFigures | None    # None for flagged (unevaluated) rows
    flags: tuple[str, ...]

    @property
    def n_final(self) -> float:
        return self.figures.n_final if self.figures is not None else math.nan


@dataclass(frozen=True)
class SweepResult:
    axis_name: str
    grid: np.ndarray
    rows: list[SweepRow]
    best: int | None             # index of the grid-global minimum of n_final

    def n_finals(self) -> np.ndarray:
        return np.array([row.n_final for row in self.rows])


@dataclass(frozen=True)
class GridPoint:
    delta1: float
    coupling_J: float
    g: float
    figures: CoolingFigures | None
    flags: tuple[str, ...]


@dataclass(frozen=True)
class GridSearchResult:
    delta1_grid: np.ndarray
    coupling_grid: np.ndarray
    points: list[list[GridPoint]]     # [i_delta1][j_J]
    best: GridPoint
    analytic: OptimalPoint            # best point on the analytic curve
    analytic_to_best_ratio: float     # n_f(analytic) / n_f(grid best)


def optimal_J_for_delta1(delta1: float, omega_m: float = 1.0) -> float:
    """Coupling that pins the upper normal mode at +omega_m for delta2 = -omega_m."""
    if delta1 > omega_m:
        raise UnsupportedRegime(
            f"no real optimal J for delta1 = {delta1:g} > omega_m = {omega_m:g}")
    return math.sqrt(2.0 * omega_m * (omega_m - delta1))


def delta1_for_optimal_J(coupling_J: float, omega_m: float = 1.0) -> float:
    """Inverse tie: effective detuning for which the given J is optimal."""
    if coupling_J < 0:
        raise ValueError(f"coupling_J must be >= 0, got {coupling_J}")
    return omega_m - coupling_J**2 / (2.0 * omega_m)


def _evaluate(p: SystemParams) -> tuple[CoolingFigures | None, float, tuple[str, ...]]:
    """One sweep/grid point: (figures, g, flags); degenerate points flagged."""
    ss = solve_steady_state(p)
    try:
        fig = cooling_figures(p, ss)
    except DegenerateSpectrum:
        return None, ss.g_eff, ("degenerate-spectrum",)
    return fig, ss.g_eff, fig.flags


def optimal_point(p_template: SystemParams, coupling_J: float) -> OptimalPoint:
    """Predicted cooling figures at the analytic conditions for a given J."""
    om = p_template.omega_m
    delta1 = delta1_for_optimal_J(coupling_J, om)
    p = p_template.with_(coupling_J=coupling_J, delta1=delta1, delta2=-om)
    fig = cooling_figures(p, solve_steady_state(p))
    return OptimalPoint(delta2_opt=-om, coupling_J=coupling_J,
                        delta1_opt=delta1, predicted=fig)


def sweep_J(p_template: SystemParams, J_grid, mode: str = MODE_FROM_DRIVE) -> SweepResult:
    """Sweep the coupling along the analytic-condition curve.

    Each grid point gets delta1 = delta1_for_optimal_J(J) and
    delta2 = -omega_m; fixed-g mode uses the template's g_fixed, from-drive
    recomputes g from the steady state. Degenerate points become flagged
    rows; the sweep never aborts.
    """
    if mode not in (MODE_FIXED_G, MODE_FROM_DRIVE):
        raise ValueError(f"unknown sweep mode {mode!r}")
    if mode == MODE_FIXED_G and p_template.g_fixed is None:
        raise ValueError("fixed-g sweep requires g_fixed on the template")
    om = p_template.omega_m
    J_grid = np.asarray(J_grid, dtype=float)

    rows: list[SweepRow] = []
    for J in J_grid:
        delta1 = delta1_for_optimal_J(float(J), om)
        p = p_template.with_(coupling_J=float(J), delta1=delta1, delta2=-om,
                             g_fixed=p_template.g_fixed if mode == MODE_FIXED_G else None)
        fig, g, flags = _evaluate(p)
        rows.append(SweepRow(coupling_J=float(J), delta1=delta1, g=g,
                             figures=fig, flags=flags))

    best = _argmin_n_final([(row.figures, i) for i, row in enumerate(rows)])
    return SweepResult(axis_name="J", grid=J_grid, rows=rows, best=best)


def _argmin_n_final(candidates) -> int | None:
    best_i, best_v = None, math.inf
    for fig, i in candidates:
        if fig is not None and math.isfinite(fig.n_final) and fig.n_final < best_v:
            best_i, best_v = i, fig.n_final
    return best_i


def grid_search(p_template: SystemParams, delta1_grid, J_grid) -> GridSearchResult:
    """Brute-force (delta1, J) search at delta2 = -omega_m.

    Points with delta1 > omega_m are flagged unsupported-regime and not
    evaluated. Also reports the best point on the analytic curve (sampled
    at the J grid) and its n_f ratio to the grid minimum.
    """
    om = p_template.omega_m
    delta1_grid = np.asarray(delta1_grid, dtype=float)
    J_grid = np.asarray(J_grid, dtype=float)

    points: list[list[GridPoint]] = []
    flat: list[tuple[CoolingFigures | None, tuple[int, int]]] = []
    for i, d1 in enumerate(delta1_grid):
        row: list[GridPoint] = []
        for j, J in enumerate(J_grid):
            if d1 > om:
                pt = GridPoint(delta1=float(d1), coupling_J=float(J), g=math.nan,
                               figures=None, flags=("unsupported-regime",))
            else:
                p = p_template.with_(coupling_J=float(J), delta1=float(d1), delta2=-om)
                fig, g, flags = _evaluate(p)
                pt = GridPoint(delta1=float(d1), coupling_J=float(J), g=g,
                               figures=fig, flags=flags)
            flat.append((pt.figures, (i, j)))
            row.append(pt)
        points.append(row)

    best_i, best_v = None, math.inf
    for fig, ij in flat:
        if fig is not None and math.isfinite(fig.n_final) and fig.n_final < best_v:
            best_i, best_v = ij, fig.n_final
    if best_i is None:
        raise UnsupportedRegime("no valid grid point to minimize over")
    best = points[best_i[0]][best_i[1]]

    candidates = [optimal_point(p_template, float(J)) for J in J_grid]
    analytic = min(candidates, key=lambda c: c.predicted.n_final)
    ratio = analytic.predicted.n_final / best.figures.n_final
    return GridSearchResult(delta1_grid=delta1_grid, coupling_grid=J_grid,
                            points=points, best=best, analytic=analytic,
                            analytic_to_best_ratio=ratio)
