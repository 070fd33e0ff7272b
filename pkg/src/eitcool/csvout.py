"""Deterministic CSV emission: 12 significant digits, LF endings, and a
`# key = value` header echoing the fully resolved parameter set (the
header lines double as a loadable config)."""

from __future__ import annotations

import math
from typing import IO, Iterable, Sequence

from .cooling import CoolingFigures, FockDistribution
from .optimizer import GridSearchResult, SweepResult
from .params import SystemParams
from .spectrum import SpectrumCurve


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    return f"{x:.12g}"


def param_items(p: SystemParams) -> list[tuple[str, float]]:
    items = [("omega_m", p.omega_m), ("kappa1", p.kappa1), ("kappa2", p.kappa2),
             ("delta1", p.delta1), ("delta2", p.delta2), ("J", p.coupling_J),
             ("g0", p.g0), ("eps", p.drive_eps), ("gamma_m", p.gamma_m),
             ("n_thermal", p.n_thermal)]
    if p.g_fixed is not None:
        items.append(("g_fixed", p.g_fixed))
    return items


def header_lines(title: str, p: SystemParams | None = None,
                 extra: Sequence[tuple[str, object]] = ()) -> list[str]:
    lines = [f"# {title}"]
    for key, val in extra:
        lines.append(f"# {key} = {fmt(val)}")
    if p is not None:
        for key, val in param_items(p):
            lines.append(f"# {key} = {fmt(val)}")
    return lines


def write_table(out: IO[str], lines: list[str], columns: Sequence[str],
                rows: Iterable[Sequence]) -> None:
    for line in lines:
        out.write(line + "\n")
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")


def write_spectrum(out: IO[str], p: SystemParams, curve: SpectrumCurve,
                   extra: Sequence[tuple[str, object]] = ()) -> None:
    marks = curve.landmarks
    lines = header_lines("eitcool spectrum", p, extra)
    lines += [f"# dip_position = {fmt(marks.dip_position)}",
              f"# peak_positions = {fmt(marks.peak_positions[0])} {fmt(marks.peak_positions[1])}"]
    write_table(out, lines, ("omega", "S_FF"), zip(curve.omegas, curve.values))


def _figures_cells(fig: CoolingFigures | None) -> tuple:
    if fig is None:
        return (math.nan,) * 5
    return (fig.s_plus, fig.s_minus, fig.gamma_c, fig.n_limit, fig.n_final)


def write_sweep(out: IO[str], p: SystemParams, result: SweepResult,
                extra: Sequence[tuple[str, object]] = ()) -> None:
    lines = header_lines("eitcool sweep", p, extra)
    cols = ("J", "delta1", "g", "S_plus", "S_minus", "gamma_c", "n_c", "n_f", "flags")
    rows = ((r.coupling_J, r.delta1, r.g) + _figures_cells(r.figures)
            + (";".join(r.flags),) for r in result.rows)
    write_table(out, lines, cols, rows)


def write_fig5(out: IO[str], p: SystemParams, result: SweepResult,
               extra: Sequence[tuple[str, object]] = ()) -> None:
    lines = header_lines("eitcool sweep", p, extra)
    rows = ((r.coupling_J, r.n_final,
             r.figures.n_limit if r.figures is not None else math.nan)
            for r in result.rows)
    write_table(out, lines, ("J", "n_f", "n_c"), rows)


def write_gridsearch(out: IO[str], p: SystemParams, result: GridSearchResult,
                     extra: Sequence[tuple[str, object]] = ()) -> None:
    best, ana = result.best, result.analytic
    lines = header_lines("eitcool gridsearch", p, extra)
    lines += [
        f"# best_delta1 = {fmt(best.delta1)}",
        f"# best_J = {fmt(best.coupling_J)}",
        f"# best_n_f = {fmt(best.figures.n_final)}",
        f"# analytic_delta1 = {fmt(ana.delta1_opt)}",
        f"# analytic_J = {fmt(ana.coupling_J)}",
        f"# analytic_n_f = {fmt(ana.predicted.n_final)}",
        f"# analytic_to_best_ratio = {fmt(result.analytic_to_best_ratio)}",
    ]
    cols = ("delta1", "J", "g", "S_plus", "S_minus", "gamma_c", "n_c", "n_f", "flags")
    rows = ((pt.delta1, pt.coupling_J, pt.g) + _figures_cells(pt.figures)
            + (";".join(pt.flags),)
            for row in result.points for pt in row)
    write_table(out, lines, cols, rows)


def write_trajectory(out: IO[str], p: SystemParams, ts, means,
                     extra: Sequence[tuple[str, object]] = ()) -> None:
    lines = header_lines("eitcool evolve", p, extra)
    write_table(out, lines, ("t", "mean_phonon"), zip(ts, means))


def write_distribution(out: IO[str], p: SystemParams, dist: FockDistribution,
                       extra: Sequence[tuple[str, object]] = ()) -> None:
    lines = header_lines("eitcool evolve", p, extra)
    write_table(out, lines, ("n", "P_n"), enumerate(dist.probs))
