import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def figure_csvs(tmp_path_factory):
    """All four canonical figure datasets, produced through the eitcool CLI."""
    root = tmp_path_factory.mktemp("csv")
    for fid in (2, 3, 4, 5):
        r = subprocess.run([sys.executable, "-m", "eitcool", "figure",
                            "--id", str(fid), "--out", str(root)],
                           capture_output=True, text=True)
        assert r.returncode == 0, r.stderr
    return {
        2: sorted(root.glob("fig2_J*.csv")),
        3: sorted(root.glob("fig3_kappa2_*.csv")),
        4: sorted(root.glob("fig4_kappa2_*.csv")),
        5: [root / "fig5.csv"],
    }
