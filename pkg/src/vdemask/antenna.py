"""Omnidirectional elevation gain pattern for land stations.

The pattern is the azimuth-averaged omnidirectional reference family: a
parabolic main lobe out to a crossover angle, then a sidelobe floor whose
level is set by ``sidelobe_param`` (k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError


def beamwidth_from_peak_gain(peak_gain: float) -> float:
    """3 dB elevation beamwidth in degrees implied by an omni's peak gain in dBi."""
    return 107.6 * 10.0 ** (-0.1 * peak_gain)


@dataclass(frozen=True)
class AntennaPattern:
    peak_gain: float
    beamwidth_3db: float
    sidelobe_param: float = 0.7

    def __post_init__(self) -> None:
        if not math.isfinite(self.peak_gain):
            raise DomainError("peak_gain must be finite")
        if not self.beamwidth_3db > 0:
            raise DomainError(f"beamwidth_3db must be positive, got {self.beamwidth_3db!r}")
        if not self.sidelobe_param >= 0:
            raise DomainError(f"sidelobe_param must be >= 0, got {self.sidelobe_param!r}")

    @classmethod
    def from_peak_gain(cls, peak_gain: float, sidelobe_param: float = 0.7) -> AntennaPattern:
        return cls(peak_gain, beamwidth_from_peak_gain(peak_gain), sidelobe_param)

    @property
    def crossover_angle(self) -> float:
        """Elevation where the main-lobe parabola hands over to the sidelobe term."""
        radicand = 1.0 - math.log10(self.sidelobe_param + 1.0) / 1.2
        return self.beamwidth_3db * math.sqrt(max(radicand, 0.0))

    def _main_lobe(self, theta: float) -> float:
        return self.peak_gain - 12.0 * (theta / self.beamwidth_3db) ** 2

    def _sidelobe(self, theta: float) -> float:
        x = max(theta / self.beamwidth_3db, 1.0)
        return self.peak_gain - 12.0 + 10.0 * math.log10(x ** -1.5 + self.sidelobe_param)

    def gain(self, theta: float) -> float:
        return gain(self, theta)


def gain(pattern: AntennaPattern, theta: float) -> float:
    """Gain in dBi at elevation ``theta`` degrees, 0 <= theta <= 90.

    Non-increasing in theta: past the crossover the sidelobe branch is
    clamped to the main-lobe value reached at the crossover.
    """
    if not 0.0 <= theta <= 90.0:
        raise DomainError(f"elevation must lie in [0, 90] degrees, got {theta!r}")
    if theta == 0.0:
        return pattern.peak_gain
    theta4 = pattern.crossover_angle
    if theta < theta4:
        return pattern._main_lobe(theta)
    g = min(pattern._sidelobe(theta), pattern._main_lobe(theta4))
    return min(g, pattern.peak_gain)


def gains(pattern: AntennaPattern, thetas: Iterable[float]) -> list[float]:
    return [gain(pattern, t) for t in thetas]
