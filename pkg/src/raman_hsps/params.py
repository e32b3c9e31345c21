"""Molecular ensemble parameters and the thermal phonon occupancy."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import BOLTZMANN_K, PLANCK_H
from .errors import ParameterDomainError


@dataclass(frozen=True)
class MolecularEnsembleParams:
    """Vibrational mode of an ensemble of identical, non-interacting molecules.

    Attributes
    ----------
    nu_v : float
        Vibrational frequency in Hz (ordinary, not angular).
    gamma_v : float
        Phonon amplitude decay rate in 1/s.
    molecule_count : int
        Number of molecules M.
    temperature : float
        Ambient temperature in kelvin.
    """

    nu_v: float
    gamma_v: float = 1.0e12
    molecule_count: int = 1
    temperature: float = 300.0

    def __post_init__(self):
        if not (self.nu_v > 0 and math.isfinite(self.nu_v)):
            raise ParameterDomainError(f"nu_v must be positive and finite, got {self.nu_v}")
        if not (self.gamma_v > 0 and math.isfinite(self.gamma_v)):
            raise ParameterDomainError(f"gamma_v must be positive and finite, got {self.gamma_v}")
        if not (self.temperature > 0 and math.isfinite(self.temperature)):
            raise ParameterDomainError(f"temperature must be positive, got {self.temperature}")
        if int(self.molecule_count) != self.molecule_count or self.molecule_count < 1:
            raise ParameterDomainError(
                f"molecule_count must be a positive integer, got {self.molecule_count}"
            )

    @property
    def omega_v(self) -> float:
        """Angular vibrational frequency in rad/s."""
        return 2.0 * math.pi * self.nu_v

    @property
    def n_v(self) -> float:
        return thermal_occupancy(self)


def _bose(nu_v: float, temperature: float) -> float:
    if not (temperature > 0):
        raise ParameterDomainError(f"temperature must be positive, got {temperature}")
    if not (nu_v > 0):
        raise ParameterDomainError(f"nu_v must be positive, got {nu_v}")
    x = PLANCK_H * nu_v / (BOLTZMANN_K * temperature)
    # expm1 keeps full precision when h nu << k T; the exp(-x) form underflows to 0 instead of overflowing
    if x < 1.0:
        return 1.0 / math.expm1(x)
    return math.exp(-x) / -math.expm1(-x)


def thermal_occupancy(params=None, *, nu_v=None, temperature=None) -> float:
    """Bose-Einstein mean phonon number ``1 / (exp(h nu / k T) - 1)``.

    Accepts either a :class:`MolecularEnsembleParams` or the two keyword
    arguments directly.

    >>> f"{thermal_occupancy(nu_v=50e12, temperature=300.0):.4e}"
    '3.3600e-04'
    """
    if params is not None:
        nu_v, temperature = params.nu_v, params.temperature
    if nu_v is None or temperature is None:
        raise TypeError("pass MolecularEnsembleParams or both nu_v and temperature")
    return _bose(float(nu_v), float(temperature))


def temperature_for_occupancy(n_v: float, nu_v: float) -> float:
    """Invert the Bose factor: the temperature at which mode ``nu_v`` holds ``n_v`` phonons."""
    if not (n_v > 0 and math.isfinite(n_v)):
        raise ParameterDomainError(f"n_v must be positive and finite, got {n_v}")
    if not (nu_v > 0):
        raise ParameterDomainError(f"nu_v must be positive, got {nu_v}")
    return PLANCK_H * nu_v / (BOLTZMANN_K * math.log1p(1.0 / n_v))
