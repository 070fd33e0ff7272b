import pytest

from eitcool import SystemParams

# Operating point of the headline cooling result: optimal-condition
# detunings for J = 1.6, drive-derived coupling, 300 mK bath.
HEADLINE = dict(kappa1=3.0, kappa2=0.1, delta1=-0.28, delta2=-1.0,
                coupling_J=1.6, g0=1.2e-4, drive_eps=6000.0,
                gamma_m=1.25e-5, n_thermal=312.0)


@pytest.fixture
def headline_params() -> SystemParams:
    return SystemParams(**HEADLINE)


def make_params(**overrides) -> SystemParams:
    base = dict(kappa1=3.0, kappa2=0.1, delta1=1.0, delta2=-1.0, coupling_J=1.0)
    base.update(overrides)
    return SystemParams(**base)
