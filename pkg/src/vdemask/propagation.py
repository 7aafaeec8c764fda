"""Terrestrial path geometry and loss, plus satellite slant range."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .environment import SPEED_OF_LIGHT
from .errors import DomainError

EARTH_RADIUS = 6_371_000.0  # m, mean


@dataclass(frozen=True)
class PathBudget:
    distance: float
    free_space_loss: float
    excess_loss: float

    def __post_init__(self) -> None:
        if not self.distance > 0:
            raise DomainError("path distance must be positive")
        if self.free_space_loss < 0 or self.excess_loss < 0:
            raise DomainError("path losses must be non-negative")

    @property
    def total_loss(self) -> float:
        return total_path_loss(self.free_space_loss, self.excess_loss)


def horizon_distance(antenna_height: float) -> float:
    """Geometric (no refraction) distance to the horizon in metres."""
    if antenna_height < 0:
        raise DomainError(f"antenna height must be >= 0, got {antenna_height!r}")
    return math.sqrt(2.0 * EARTH_RADIUS * antenna_height)


def free_space_loss(distance: float, frequency: float) -> float:
    """Free-space basic transmission loss 20*log10(4*pi*d/lambda) in dB."""
    if not distance > 0 or not frequency > 0:
        raise DomainError("distance and frequency must be positive")
    return 20.0 * math.log10(4.0 * math.pi * distance * frequency / SPEED_OF_LIGHT)


def total_path_loss(fsl: float, excess: float) -> float:
    if fsl < 0 or excess < 0:
        raise DomainError("path losses must be non-negative")
    return fsl + excess


def land_path(height_a: float, height_b: float, frequency: float, excess_loss: float) -> PathBudget:
    """Longest line-of-sight link between two stations: the sum of their horizons."""
    d = horizon_distance(height_a) + horizon_distance(height_b)
    return PathBudget(d, free_space_loss(d, frequency), excess_loss)


def slant_range(orbit_altitude: float, theta: float) -> float:
    """Distance from a ground point to a satellite seen at elevation ``theta`` degrees.

    Spherical Earth, satellite at ``orbit_altitude`` metres above the surface.
    """
    if not orbit_altitude > 0:
        raise DomainError(f"orbit altitude must be positive, got {orbit_altitude!r}")
    if not 0.0 <= theta <= 90.0:
        raise DomainError(f"elevation must lie in [0, 90] degrees, got {theta!r}")
    re, h = EARTH_RADIUS, orbit_altitude
    s = math.sin(math.radians(theta))
    # sqrt(...) - re*s cancels badly for small h; use the conjugate form.
    disc = math.sqrt((re * s) ** 2 + 2.0 * re * h + h * h)
    return (2.0 * re * h + h * h) / (disc + re * s)
