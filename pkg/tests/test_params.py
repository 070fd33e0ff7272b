import math

import numpy as np
import pytest

from eitcool import (ConfigError, ParameterError, SIEnvironment, SystemParams,
                     denormalize, normalize, read_config, thermal_occupation)

TWO_PI_20MHZ = 2 * math.pi * 20e6


def test_thermal_occupation_reference_point():
    env = SIEnvironment(omega_m_hz=TWO_PI_20MHZ, temperature_K=0.3, quality_Q=8e4)
    assert abs(thermal_occupation(env) - 312) <= 1


def test_thermal_occupation_doubled_temperature():
    # direct Bose-formula evaluation at 600 mK gives 624.599
    env = SIEnvironment(omega_m_hz=TWO_PI_20MHZ, temperature_K=0.6, quality_Q=8e4)
    assert thermal_occupation(env) == pytest.approx(624.599, abs=0.05)


def test_thermal_occupation_vanishes_at_low_temperature():
    env = SIEnvironment(omega_m_hz=TWO_PI_20MHZ, temperature_K=1e-5, quality_Q=8e4)
    assert thermal_occupation(env) < 1e-6


def test_thermal_occupation_monotonicity():
    qs = 8e4
    for T1, T2 in [(0.1, 0.2), (0.3, 0.31), (1.0, 2.0)]:
        lo = thermal_occupation(SIEnvironment(TWO_PI_20MHZ, T1, qs))
        hi = thermal_occupation(SIEnvironment(TWO_PI_20MHZ, T2, qs))
        assert lo < hi
    for w1, w2 in [(1e7, 2e7), (TWO_PI_20MHZ, 2 * TWO_PI_20MHZ)]:
        hi = thermal_occupation(SIEnvironment(w1, 0.3, qs))
        lo = thermal_occupation(SIEnvironment(w2, 0.3, qs))
        assert lo < hi


def test_thermal_occupation_high_temperature_expansion():
    # n_m -> kB T / (hbar omega) - 1/2 within 0.2% for x < 0.01
    from scipy.constants import hbar, k as k_B
    rng = np.random.default_rng(11)
    for _ in range(20):
        w = rng.uniform(1e6, 1e9)
        T = hbar * w / (k_B * rng.uniform(1e-4, 0.01))  # x = hbar w / kB T
        n = thermal_occupation(SIEnvironment(w, T, 1e4))
        approx = k_B * T / (hbar * w) - 0.5
        assert abs(n - approx) / n < 0.002


def test_thermal_occupation_rejects_bad_inputs():
    with pytest.raises(ParameterError):
        SIEnvironment(omega_m_hz=-1.0, temperature_K=0.3, quality_Q=8e4)
    with pytest.raises(ParameterError):
        SIEnvironment(omega_m_hz=TWO_PI_20MHZ, temperature_K=0.0, quality_Q=8e4)
    with pytest.raises(ParameterError):
        SIEnvironment(omega_m_hz=math.nan, temperature_K=0.3, quality_Q=8e4)


BASE = dict(kappa1=3.0, kappa2=0.1, delta1=-0.28, delta2=-1.0, J=1.6)


def test_normalize_gamma_from_quality_factor():
    p, _ = normalize({**BASE, "quality_Q": 8e4, "n_thermal": 312.0})
    assert p.gamma_m == pytest.approx(1.25e-5, rel=1e-12)


def test_normalize_identity_in_omega_m_units():
    raw = {**BASE, "gamma_m": 1.25e-5, "n_thermal": 312.0, "g0": 1.2e-4, "eps": 6000.0}
    p, env = normalize(raw)
    assert env is None
    assert (p.kappa1, p.kappa2, p.delta1, p.delta2, p.coupling_J) == (3.0, 0.1, -0.28, -1.0, 1.6)
    assert p.g0 == 1.2e-4 and p.drive_eps == 6000.0 and p.n_thermal == 312.0


def test_normalize_hz_rate_key():
    raw = {"omega_m_hz": TWO_PI_20MHZ, "kappa1_hz": 2 * math.pi * 60e6,
           "kappa2": 0.1, "delta1": 1.0, "delta2": -1.0, "J": 1.0,
           "gamma_m": 0.0, "n_thermal": 1.0}
    p, _ = normalize(raw)
    assert p.kappa1 == pytest.approx(3.0, rel=1e-12)


def test_normalize_unit_conflict_rejected():
    raw = {**BASE, "kappa1_hz": 1e8, "omega_m_hz": TWO_PI_20MHZ,
           "gamma_m": 0.0, "n_thermal": 1.0}
    with pytest.raises(ConfigError, match="kappa1"):
        normalize(raw)


def test_normalize_unknown_key_named():
    with pytest.raises(ConfigError, match="kappa3"):
        normalize({**BASE, "kappa3": 1.0})


def test_normalize_missing_key_named():
    raw = {k: v for k, v in BASE.items() if k != "delta2"}
    with pytest.raises(ConfigError, match="delta2"):
        normalize({**raw, "gamma_m": 0.0, "n_thermal": 1.0})


def test_normalize_n_thermal_consistency_rule():
    si = {"omega_m_hz": TWO_PI_20MHZ, "temperature_K": 0.3, "quality_Q": 8e4}
    # within 1% of the Bose factor 312.05: accepted, direct value kept
    p, env = normalize({**BASE, **si, "n_thermal": 312.0})
    assert p.n_thermal == 312.0
    assert env is not None
    # more than 1% off: rejected
    with pytest.raises(ConfigError, match="n_thermal"):
        normalize({**BASE, **si, "n_thermal": 250.0})


def test_normalize_gamma_consistency_rule():
    si = {"omega_m_hz": TWO_PI_20MHZ, "temperature_K": 0.3, "quality_Q": 8e4}
    p, _ = normalize({**BASE, **si, "gamma_m": 1.25e-5})
    assert p.gamma_m == 1.25e-5
    with pytest.raises(ConfigError, match="gamma_m"):
        normalize({**BASE, **si, "gamma_m": 5e-5})


def test_param_invariants_rejected():
    with pytest.raises(ParameterError):
        SystemParams(kappa1=0.0, kappa2=0.1, delta1=0.0, delta2=0.0, coupling_J=1.0)
    with pytest.raises(ParameterError):
        SystemParams(kappa1=3.0, kappa2=-0.1, delta1=0.0, delta2=0.0, coupling_J=1.0)
    with pytest.raises(ParameterError):
        SystemParams(kappa1=3.0, kappa2=0.1, delta1=math.inf, delta2=0.0, coupling_J=1.0)
    with pytest.raises(ParameterError):
        SystemParams(kappa1=3.0, kappa2=0.1, delta1=0.0, delta2=0.0, coupling_J=1.0,
                     n_thermal=-1.0)
    with pytest.raises(ParameterError):
        SystemParams(kappa1=3.0, kappa2=0.1, delta1=0.0, delta2=0.0, coupling_J=1.0,
                     g_fixed=-0.2)
    # kappa2 = 0 is a legal idealized input
    SystemParams(kappa1=3.0, kappa2=0.0, delta1=0.0, delta2=-1.0, coupling_J=1.0)


def test_round_trip_normalize_denormalize():
    rng = np.random.default_rng(5)
    env = SIEnvironment(omega_m_hz=TWO_PI_20MHZ, temperature_K=0.3, quality_Q=8e4)
    for _ in range(20):
        p = SystemParams(
            kappa1=rng.uniform(0.5, 4), kappa2=rng.uniform(0.0, 0.5),
            delta1=rng.uniform(-3, 2), delta2=rng.uniform(-2, 0),
            coupling_J=rng.uniform(0, 3), g0=rng.uniform(0, 1e-3),
            drive_eps=rng.uniform(0, 1e4), gamma_m=rng.uniform(0, 1e-3),
            n_thermal=rng.uniform(0, 400),
            g_fixed=rng.uniform(0, 0.5) if rng.random() < 0.5 else None)
        q, _ = normalize(denormalize(p, env))
        for field in ("kappa1", "kappa2", "delta1", "delta2", "coupling_J",
                      "g0", "drive_eps", "gamma_m", "n_thermal"):
            a, b = getattr(p, field), getattr(q, field)
            assert b == pytest.approx(a, rel=1e-12, abs=1e-15), field
        if p.g_fixed is None:
            assert q.g_fixed is None
        else:
            assert q.g_fixed == pytest.approx(p.g_fixed, rel=1e-12)


def test_read_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# reference operating point\n"
        "kappa1 = 3.0\n"
        "kappa2 = 0.1   # auxiliary cavity\n"
        "delta1 = -0.28\n"
        "delta2 = -1\n"
        "J = 1.6\n"
        "\n"
        "g0 = 1.2e-4\n", encoding="utf-8")
    values = read_config(str(cfg))
    assert values == {"kappa1": 3.0, "kappa2": 0.1, "delta1": -0.28,
                      "delta2": -1.0, "J": 1.6, "g0": 1.2e-4}


@pytest.mark.parametrize("line,needle", [
    ("kappa9 = 1.0", "kappa9"),
    ("kappa1 = fast", "kappa1"),
    ("kappa1 3.0", "key = value"),
    ("kappa1 = 1\nkappa1 = 2", "duplicate"),
])
def test_read_config_rejects(tmp_path, line, needle):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(line + "\n", encoding="utf-8")
    with pytest.raises(ConfigError, match=needle):
        read_config(str(cfg))
