import numpy as np
import pytest

from figplots import RenderError, load_spec, read_dataset, render
from figplots.cli import main

EXPECTED_SERIES = {2: ("omega", ["S_FF"]), 3: ("omega", ["S_FF"]),
                   4: ("J", ["gamma_c"]), 5: ("J", ["n_f", "n_c"])}


def _check_lines_match_csvs(fig, fid, paths):
    """Acceptance: plotted arrays equal the CSV columns row-for-row."""
    xcol, ycols = EXPECTED_SERIES[fid]
    lines = fig.axes[0].get_lines()
    assert len(lines) == len(paths) * len(ycols)
    k = 0
    for path in paths:
        ds = read_dataset(str(path))
        for ycol in ycols:
            xy = lines[k].get_xydata()
            np.testing.assert_array_equal(xy[:, 0], ds.columns[xcol])
            np.testing.assert_array_equal(xy[:, 1], ds.columns[ycol])
            k += 1


@pytest.mark.parametrize("fid", [2, 3, 4, 5])
def test_rendered_series_match_csvs(figure_csvs, tmp_path, fid):
    paths = figure_csvs[fid]
    out = tmp_path / f"fig{fid}.png"
    spec = load_spec(fid, [str(p) for p in paths], str(out))
    fig = render(spec)
    assert out.exists() and out.stat().st_size > 0
    _check_lines_match_csvs(fig, fid, paths)


def test_svg_output(figure_csvs, tmp_path):
    out = tmp_path / "fig5.svg"
    render(load_spec(5, [str(figure_csvs[5][0])], str(out)))
    assert out.read_bytes().lstrip().startswith(b"<?xml")


def test_fig5_line_styles(figure_csvs, tmp_path):
    fig = render(load_spec(5, [str(figure_csvs[5][0])], str(tmp_path / "f5.png")))
    ax = fig.axes[0]
    nf, nc = ax.get_lines()
    assert nf.get_linestyle() == "-" and nc.get_linestyle() == "--"
    assert ax.get_yscale() == "log"
    labels = [ln.get_label() for ln in ax.get_lines()]
    assert "$n_f$" in labels and "$n_c$" in labels


def test_fig3_legend_names_kappa2(figure_csvs, tmp_path):
    fig = render(load_spec(3, [str(p) for p in figure_csvs[3]],
                           str(tmp_path / "f3.png")))
    labels = [ln.get_label() for ln in fig.axes[0].get_lines()]
    assert labels == [r"$\kappa_2$ = 0.05", r"$\kappa_2$ = 0.1",
                      r"$\kappa_2$ = 0.2", r"$\kappa_2$ = 0.4"]
    # dip heights at omega = -1 ordered by kappa2
    dips = []
    for ln in fig.axes[0].get_lines():
        xy = ln.get_xydata()
        dips.append(xy[np.argmin(np.abs(xy[:, 0] + 1.0)), 1])
    assert all(a < b for a, b in zip(dips, dips[1:]))


def test_empty_csv_rejected(tmp_path):
    bad = tmp_path / "empty.csv"
    bad.write_text("# figure = 2\n# J = 1\nomega,S_FF\n")
    out = tmp_path / "out.png"
    with pytest.raises(RenderError, match="no data rows"):
        load_spec(2, [str(bad)], str(out))
    assert not out.exists()


def test_figure_id_mismatch_rejected(figure_csvs, tmp_path):
    with pytest.raises(RenderError, match="mismatch"):
        load_spec(4, [str(figure_csvs[2][0])], str(tmp_path / "out.png"))


def test_missing_column_named(tmp_path):
    bad = tmp_path / "cols.csv"
    bad.write_text("# figure = 5\n# kappa1 = 3\nJ,n_f\n0.2,1.0\n")
    with pytest.raises(RenderError, match="n_c"):
        load_spec(5, [str(bad)], str(tmp_path / "out.png"))


def test_missing_header_echo_rejected(tmp_path):
    bad = tmp_path / "plain.csv"
    bad.write_text("omega,S_FF\n0.0,1.0\n")
    with pytest.raises(RenderError, match="parameter echo|figure id"):
        load_spec(2, [str(bad)], str(tmp_path / "out.png"))


def test_cli_round_trip(figure_csvs, tmp_path, capsys):
    out = tmp_path / "fig2.png"
    code = main(["2", *[str(p) for p in figure_csvs[2]], "-o", str(out)])
    assert code == 0 and out.exists()
    assert str(out) in capsys.readouterr().out


def test_cli_reports_errors(tmp_path, capsys):
    code = main(["9", str(tmp_path / "missing.csv"), "-o", str(tmp_path / "x.png")])
    assert code == 1
    assert "figure id" in capsys.readouterr().err
