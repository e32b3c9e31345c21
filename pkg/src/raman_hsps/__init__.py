"""Heralded single-photon source from Raman scattering on a molecular ensemble.

Closed-form Stokes/anti-Stokes correlators, purity and efficiency of the
heralded source, a Wick-pairing oracle that recomputes every correlator from
the Gaussian phonon model, and a Monte Carlo detection simulator.
"""

from .errors import (
    ConfigurationError,
    DegenerateInputError,
    LowIntensityError,
    ParameterDomainError,
    UnsupportedOrderError,
)
from .params import MolecularEnsembleParams, temperature_for_occupancy, thermal_occupancy
from .extsource import ExternalSourceStats, eval_g2, eval_g3
from .correlations import (
    BackgroundParams,
    CorrelationSet,
    Scenario,
    auto_correlations,
    background_correlations,
    ideal_correlations,
    incoherent_correlations,
)
from .metrics import (
    Herald,
    SourceFigures,
    background_limits,
    delay_limits,
    ideal_limits,
    incoherent_limits,
    purity_efficiency,
)

__version__ = "0.1.0"

__all__ = [
    "BackgroundParams",
    "ConfigurationError",
    "CorrelationSet",
    "DegenerateInputError",
    "ExternalSourceStats",
    "Herald",
    "LowIntensityError",
    "MolecularEnsembleParams",
    "ParameterDomainError",
    "Scenario",
    "SourceFigures",
    "UnsupportedOrderError",
    "auto_correlations",
    "background_correlations",
    "background_limits",
    "delay_limits",
    "eval_g2",
    "eval_g3",
    "ideal_correlations",
    "ideal_limits",
    "incoherent_correlations",
    "incoherent_limits",
    "purity_efficiency",
    "temperature_for_occupancy",
    "thermal_occupancy",
]
