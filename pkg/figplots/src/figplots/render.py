"""Render eitcool figure CSVs into plots styled after the canonical figures.

Plots read only the CSV content; no physics is recomputed here. Each CSV
must carry the emitting run's parameter echo (`# key = value` lines)
including the `figure` id, which must match the requested one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class RenderError(ValueError):
    pass


# Per-figure layout: data columns, axis labels, legend parameter, y scale.
FIGURES = {
    2: dict(x="omega", ys=("S_FF",), xlabel=r"$\omega/\omega_m$",
            ylabel=r"$S_{FF}$ (arb. units)", legend_key="J",
            legend_label=r"$J$", yscale="linear"),
    3: dict(x="omega", ys=("S_FF",), xlabel=r"$\omega/\omega_m$",
            ylabel=r"$S_{FF}$ (arb. units)", legend_key="kappa2",
            legend_label=r"$\kappa_2$", yscale="linear"),
    4: dict(x="J", ys=("gamma_c",), xlabel=r"$J/\omega_m$",
            ylabel=r"$\gamma_c/\omega_m$", legend_key="kappa2",
            legend_label=r"$\kappa_2$", yscale="linear"),
    5: dict(x="J", ys=("n_f", "n_c"), xlabel=r"$J/\omega_m$",
            ylabel="phonon number", legend_key=None, legend_label=None,
            yscale="log"),
}

# Fig. 5 line styles: n_f red solid, n_c blue dashed.
FIG5_STYLES = {"n_f": dict(color="tab:red", linestyle="-", label=r"$n_f$"),
               "n_c": dict(color="tab:blue", linestyle="--", label=r"$n_c$")}


@dataclass(frozen=True)
class Dataset:
    path: str
    params: dict[str, str]
    columns: dict[str, np.ndarray]


@dataclass(frozen=True)
class PlotSpec:
    figure_id: int
    csv_paths: tuple[str, ...]
    out_path: str
    datasets: tuple[Dataset, ...] = field(default=())


def read_dataset(path: str) -> Dataset:
    params: dict[str, str] = {}
    names: list[str] | None = None
    rows: list[list[str]] = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, val = body.partition("=")
                params[key.strip()] = val.strip()
        elif names is None:
            names = line.split(",")
        elif line:
            rows.append(line.split(","))
    if names is None or not rows:
        raise RenderError(f"{path}: no data rows")
    columns = {}
    for i, name in enumerate(names):
        try:
            columns[name] = np.array([r[i] for r in rows], dtype=float)
        except ValueError:
            columns[name] = np.array([r[i] for r in rows])  # flags etc.
    return Dataset(path=path, params=params, columns=columns)


def load_spec(figure_id: int, csv_paths, out_path: str) -> PlotSpec:
    if figure_id not in FIGURES:
        raise RenderError(f"unknown figure id '{figure_id}' (expected 2, 3, 4, or 5)")
    if not csv_paths:
        raise RenderError("no input CSV given")
    layout = FIGURES[figure_id]
    datasets = []
    for path in csv_paths:
        ds = read_dataset(path)
        if not ds.params:
            raise RenderError(f"{path}: missing parameter echo in header")
        if ds.params.get("figure") != str(figure_id):
            raise RenderError(
                f"{path}: figure id mismatch (header says {ds.params.get('figure')!r}, "
                f"requested {figure_id})")
        missing = [c for c in (layout["x"], *layout["ys"]) if c not in ds.columns]
        if missing:
            raise RenderError(f"{path}: missing column '{missing[0]}'")
        datasets.append(ds)
    return PlotSpec(figure_id=figure_id, csv_paths=tuple(csv_paths),
                    out_path=out_path, datasets=tuple(datasets))


def render(spec: PlotSpec):
    """Plot the datasets and write the image; returns the Figure."""
    layout = FIGURES[spec.figure_id]
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    for ds in spec.datasets:
        x = ds.columns[layout["x"]]
        for col in layout["ys"]:
            style = FIG5_STYLES.get(col, {}) if spec.figure_id == 5 else {}
            if not style and layout["legend_key"]:
                value = ds.params.get(layout["legend_key"], "?")
                style = dict(label=f"{layout['legend_label']} = {value}")
            ax.plot(x, ds.columns[col], **style)
    ax.set_xlabel(layout["xlabel"])
    ax.set_ylabel(layout["ylabel"])
    ax.set_yscale(layout["yscale"])
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(spec.out_path)
    plt.close(fig)
    return fig
