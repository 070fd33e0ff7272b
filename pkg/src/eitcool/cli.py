"""Command-line front end.

Subcommands compute steady states, spectra, cooling figures, trajectories,
sweeps, grid searches, and the canonical figure datasets, emitting CSV
(see csvout) or `key = value` reports. Outputs are deterministic:
identical inputs produce byte-identical files. Exit codes: 0 success,
2 validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys
from pathlib import Path

import numpy as np

from . import csvout
from .cooling import cooling_figures, evolve_mean_phonon, integrate_rate_equations, \
    thermal_distribution
from .errors import NumericsError, ValidationError
from .optimizer import MODE_FIXED_G, MODE_FROM_DRIVE, grid_search, sweep_J
from .params import SystemParams, normalize, read_config
from .spectrum import sample_spectrum
from .steady_state import solve_steady_state

PARAM_FLAGS = ("omega-m-hz", "temperature-K", "quality-Q", "kappa1", "kappa2",
               "delta1", "delta2", "J", "g0", "eps", "gamma-m", "n-thermal",
               "g-fixed")

FIG2_J_VALUES = (0.5, 1.0, 1.5, 2.0)
FIG3_KAPPA2_VALUES = (0.05, 0.1, 0.2, 0.4)
FIG4_KAPPA2_VALUES = (0.1, 0.3)
# Reference operating point: drive and mechanical-bath parameters (omega_m units).
REFERENCE = dict(kappa1=3.0, kappa2=0.1, delta2=-1.0, g0=1.2e-4, eps=6000.0,
             gamma_m=1.25e-5, n_thermal=312.0)


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="PATH", help="flat key = value parameter file")
    for flag in PARAM_FLAGS:
        sub.add_argument("--" + flag, type=float, dest=flag.replace("-", "_"),
                         help=argparse.SUPPRESS)


def _resolve_params(args) -> SystemParams:
    raw = read_config(args.config) if args.config else {}
    for flag in PARAM_FLAGS:
        key = flag.replace("-", "_")
        val = getattr(args, key, None)
        if val is not None:
            raw[key] = val
    return normalize(raw)[0]


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _step_grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0 or hi < lo:
        raise ValidationError(f"bad grid: lo={lo:g} hi={hi:g} step={step:g}")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(n)


def _report(out, title: str, p: SystemParams, pairs) -> None:
    for line in csvout.header_lines(title, p):
        out.write(line + "\n")
    for key, val in pairs:
        out.write(f"{key} = {csvout.fmt(val)}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eitcool", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("steady", help="classical steady-state amplitudes")
    _add_param_flags(p)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("spectrum", help="sample the force spectrum S_FF(omega)")
    _add_param_flags(p)
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--omega-lo", type=float, default=-6.0)
    p.add_argument("--omega-hi", type=float, default=6.0)
    p.add_argument("--n-points", type=int, default=601)

    p = sub.add_parser("cool", help="cooling rate, limit, final phonon number")
    _add_param_flags(p)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("evolve", help="mean-phonon trajectory or final distribution")
    _add_param_flags(p)
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--t-final", type=float, required=True)
    p.add_argument("--n-points", type=int, default=201)
    p.add_argument("--n0", type=float, default=None,
                   help="initial mean phonon number (default: n_thermal)")
    p.add_argument("--distribution", action="store_true",
                   help="integrate the rate equations, emit n,P_n at t_final")
    p.add_argument("--n-max", type=int, default=60)

    p = sub.add_parser("sweep", help="sweep J along the optimal-detuning curve")
    _add_param_flags(p)
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--J-lo", type=float, default=0.2, dest="J_lo")
    p.add_argument("--J-hi", type=float, default=3.0, dest="J_hi")
    p.add_argument("--J-step", type=float, default=0.01, dest="J_step")
    p.add_argument("--mode", choices=(MODE_FIXED_G, MODE_FROM_DRIVE),
                   default=MODE_FROM_DRIVE)

    p = sub.add_parser("gridsearch", help="brute-force (delta1, J) search at delta2 = -1")
    _add_param_flags(p)
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--delta1-lo", type=float, default=-3.0)
    p.add_argument("--delta1-hi", type=float, default=1.0)
    p.add_argument("--delta1-n", type=int, default=50)
    p.add_argument("--J-lo", type=float, default=0.2, dest="J_lo")
    p.add_argument("--J-hi", type=float, default=3.0, dest="J_hi")
    p.add_argument("--J-n", type=int, default=50, dest="J_n")

    p = sub.add_parser("figure", help="emit the canonical figure datasets as CSV")
    p.add_argument("--id", type=int, required=True, dest="figure_id")
    p.add_argument("--out", metavar="DIR", default=".")
    return ap


def cmd_steady(args) -> int:
    p = _resolve_params(args)
    ss = solve_steady_state(p)
    with _open_out(args.out) as out:
        _report(out, "eitcool steady", p,
                [("alpha1_re", ss.alpha1.real), ("alpha1_im", ss.alpha1.imag),
                 ("abs_alpha1", abs(ss.alpha1)),
                 ("alpha2_re", ss.alpha2.real), ("alpha2_im", ss.alpha2.imag),
                 ("abs_alpha2", abs(ss.alpha2)),
                 ("beta_re", ss.beta.real), ("beta_im", ss.beta.imag),
                 ("g_eff", ss.g_eff), ("delta1_bare", ss.delta1_bare)])
    return 0


def cmd_spectrum(args) -> int:
    p = _resolve_params(args)
    curve = sample_spectrum(p, (args.omega_lo, args.omega_hi), args.n_points)
    extra = [("omega_lo", args.omega_lo), ("omega_hi", args.omega_hi),
             ("n_points", args.n_points)]
    with _open_out(args.out) as out:
        csvout.write_spectrum(out, p, curve, extra)
    return 0


def cmd_cool(args) -> int:
    p = _resolve_params(args)
    ss = solve_steady_state(p)
    fig = cooling_figures(p, ss)
    with _open_out(args.out) as out:
        _report(out, "eitcool cool", p,
                [("g_eff", ss.g_eff), ("S_plus", fig.s_plus),
                 ("S_minus", fig.s_minus), ("gamma_c", fig.gamma_c),
                 ("n_c", fig.n_limit), ("n_f", fig.n_final),
                 ("flags", ";".join(fig.flags))])
    return 0


def cmd_evolve(args) -> int:
    p = _resolve_params(args)
    ss = solve_steady_state(p)
    n0 = p.n_thermal if args.n0 is None else args.n0
    if args.distribution:
        initial = thermal_distribution(n0, args.n_max)
        dist = integrate_rate_equations(p, ss, initial, args.t_final)
        extra = [("n0", n0), ("t_final", args.t_final), ("n_max", args.n_max)]
        with _open_out(args.out) as out:
            csvout.write_distribution(out, p, dist, extra)
    else:
        ts = np.linspace(0.0, args.t_final, args.n_points)
        means = evolve_mean_phonon(p, ss, n0, ts)
        extra = [("n0", n0), ("t_final", args.t_final), ("n_points", args.n_points)]
        with _open_out(args.out) as out:
            csvout.write_trajectory(out, p, ts, means, extra)
    return 0


def cmd_sweep(args) -> int:
    p = _resolve_params(args)
    grid = _step_grid(args.J_lo, args.J_hi, args.J_step)
    result = sweep_J(p, grid, mode=args.mode)
    with _open_out(args.out) as out:
        csvout.write_sweep(out, p, result, [("mode", args.mode)])
    return 0


def cmd_gridsearch(args) -> int:
    p = _resolve_params(args)
    d1_grid = np.linspace(args.delta1_lo, args.delta1_hi, args.delta1_n)
    J_grid = np.linspace(args.J_lo, args.J_hi, args.J_n)
    result = grid_search(p, d1_grid, J_grid)
    with _open_out(args.out) as out:
        csvout.write_gridsearch(out, p, result)
    return 0


def _write_figure_file(path: Path, writer, *writer_args) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer(fh, *writer_args)
    print(path)


def cmd_figure(args) -> int:
    fid = args.figure_id
    if fid not in (2, 3, 4, 5):
        raise ValidationError(f"invalid figure id '{fid}' (expected 2, 3, 4, or 5)")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    if fid == 2:
        # Lorentzian splitting vs J, four representative couplings.
        for J in FIG2_J_VALUES:
            p = SystemParams(kappa1=3.0, kappa2=0.1, delta1=1.0, delta2=-1.0,
                             coupling_J=J)
            curve = sample_spectrum(p, (-6.0, 6.0), 201)
            extra = [("figure", 2), ("omega_lo", -6.0), ("omega_hi", 6.0),
                     ("n_points", 201)]
            _write_figure_file(outdir / f"fig2_J{J:.2f}.csv",
                               csvout.write_spectrum, p, curve, extra)
    elif fid == 3:
        # Dip depth vs kappa2 at the optimal point for delta1 = -3.
        J = math.sqrt(8.0)
        for k2 in FIG3_KAPPA2_VALUES:
            p = SystemParams(kappa1=3.0, kappa2=k2, delta1=-3.0, delta2=-1.0,
                             coupling_J=J)
            curve = sample_spectrum(p, (-8.0, 4.0), 481)
            extra = [("figure", 3), ("omega_lo", -8.0), ("omega_hi", 4.0),
                     ("n_points", 481)]
            _write_figure_file(outdir / f"fig3_kappa2_{k2:.2f}.csv",
                               csvout.write_spectrum, p, curve, extra)
    elif fid == 4:
        # Cooling rate vs J at fixed g = 0.2 for two kappa2.
        grid = _step_grid(0.2, 3.0, 0.01)
        for k2 in FIG4_KAPPA2_VALUES:
            p = SystemParams(kappa1=REFERENCE["kappa1"], kappa2=k2, delta1=0.0,
                             delta2=-1.0, coupling_J=0.0, g_fixed=0.2,
                             gamma_m=REFERENCE["gamma_m"], n_thermal=REFERENCE["n_thermal"])
            result = sweep_J(p, grid, mode=MODE_FIXED_G)
            extra = [("figure", 4), ("mode", MODE_FIXED_G)]
            _write_figure_file(outdir / f"fig4_kappa2_{k2:.2f}.csv",
                               csvout.write_sweep, p, result, extra)
    else:
        # Final phonon number and cooling limit vs J, drive-derived g.
        grid = _step_grid(0.2, 3.0, 0.01)
        p = SystemParams(kappa1=REFERENCE["kappa1"], kappa2=REFERENCE["kappa2"],
                         delta1=0.0, delta2=REFERENCE["delta2"], coupling_J=0.0,
                         g0=REFERENCE["g0"], drive_eps=REFERENCE["eps"],
                         gamma_m=REFERENCE["gamma_m"], n_thermal=REFERENCE["n_thermal"])
        result = sweep_J(p, grid, mode=MODE_FROM_DRIVE)
        extra = [("figure", 5), ("mode", MODE_FROM_DRIVE)]
        _write_figure_file(outdir / "fig5.csv", csvout.write_fig5, p, result, extra)
    return 0


COMMANDS = {"steady": cmd_steady, "spectrum": cmd_spectrum, "cool": cmd_cool,
            "evolve": cmd_evolve, "sweep": cmd_sweep,
            "gridsearch": cmd_gridsearch, "figure": cmd_figure}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
