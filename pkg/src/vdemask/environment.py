"""Receiver noise budget: system noise temperature and noise floor."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .units import DecibelQuantity, Kind, dbw, from_db, to_db

# CODATA 2018, exact.
BOLTZMANN = 1.380649e-23  # J/K
BOLTZMANN_DB = 10.0 * math.log10(BOLTZMANN)  # dBW/(Hz K), about -228.6

SPEED_OF_LIGHT = 299_792_458.0  # m/s


@dataclass(frozen=True)
class NoiseEnvironment:
    """Noise temperatures (dBK) seen by a VHF land receiver, and the carrier frequency."""

    receiver_temp: float = 30.0
    galactic_temp: float = 24.0
    manmade_temp: float = 31.0
    frequency: float = 159.025e6

    def __post_init__(self) -> None:
        if not (self.frequency > 0 and math.isfinite(self.frequency)):
            raise DomainError(f"frequency must be positive, got {self.frequency!r}")
        for name in ("receiver_temp", "galactic_temp", "manmade_temp"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.frequency

    def system_temperature(self) -> DecibelQuantity:
        t = combine_noise_temperatures([self.receiver_temp, self.galactic_temp, self.manmade_temp])
        return DecibelQuantity(t, Kind.TEMPERATURE_DBK)

    def noise_power(self, bandwidth: float) -> DecibelQuantity:
        return noise_power(self.system_temperature().value, bandwidth)


def combine_noise_temperatures(components: Iterable[float]) -> float:
    """Sum noise temperatures given in dBK; the sum is taken in kelvin."""
    temps = list(components)
    if not temps:
        raise DomainError("at least one noise temperature is required")
    return to_db(math.fsum(from_db(t) for t in temps))


def noise_power(temperature_dbk: float, bandwidth: float) -> DecibelQuantity:
    """Thermal noise power kTB in dBW, referenced to ``bandwidth``."""
    if not (bandwidth > 0 and math.isfinite(bandwidth)):
        raise DomainError(f"bandwidth must be positive, got {bandwidth!r}")
    return dbw(BOLTZMANN_DB + temperature_dbk + 10.0 * math.log10(bandwidth), bandwidth)
