"""Sideband cooling of a mechanical resonator coupled to a photonic
molecule: force spectra, cooling figures, and optimal-coupling tools."""

from .cooling import (CoolingFigures, FockDistribution, cooling_figures,
                      evolve_mean_phonon, integrate_rate_equations,
                      rate_generator, thermal_distribution)
from .errors import (ConfigError, DegenerateSpectrum, NumericsError,
                     ParameterError, PoleAtDip, TruncationTooSmall,
                     UnsupportedRegime, ValidationError, ZeroDenominator)
from .optimizer import (GridSearchResult, OptimalPoint, SweepResult,
                        delta1_for_optimal_J, grid_search, optimal_J_for_delta1,
                        optimal_point, sweep_J)
from .params import (SIEnvironment, SystemParams, denormalize, normalize,
                     read_config, thermal_occupation)
from .spectrum import (NormalModes, SpectrumCurve, eval_S_FF, normal_modes,
                       response_A, sample_spectrum)
from .steady_state import SteadyState, solve_steady_state

__version__ = "0.1.0"
