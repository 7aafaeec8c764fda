"""Check a satellite emission against a PFD mask."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .mask import PfdMask
from .propagation import slant_range


@dataclass(frozen=True)
class SatelliteEmission:
    """Elevation-independent EIRP density (dBW per 4 kHz) from a satellite at ``orbit_altitude`` m."""

    eirp_density: float
    orbit_altitude: float

    def __post_init__(self) -> None:
        if not self.orbit_altitude > 0:
            raise DomainError(f"orbit altitude must be positive, got {self.orbit_altitude!r}")


@dataclass(frozen=True)
class ComplianceResult:
    min_margin: float
    worst_theta: float
    per_theta: tuple[tuple[float, float, float, float], ...]  # theta, mask, sat pfd, margin

    @property
    def compliant(self) -> bool:
        return self.min_margin >= 0


def satellite_pfd(emission: SatelliteEmission, theta: float) -> float:
    d = slant_range(emission.orbit_altitude, theta)
    return emission.eirp_density - 10.0 * math.log10(4.0 * math.pi * d * d)


def compliance_margin(mask: PfdMask, emission: SatelliteEmission) -> ComplianceResult:
    """Margin of the mask over the satellite's PFD at every mask sample.

    Ties for the worst margin resolve to the lowest elevation.
    """
    rows = []
    worst, worst_theta = math.inf, mask.thetas[0]
    for theta, limit in mask.samples:
        sat = satellite_pfd(emission, theta)
        margin = limit - sat
        rows.append((theta, limit, sat, margin))
        if margin < worst:
            worst, worst_theta = margin, theta
    return ComplianceResult(worst, worst_theta, tuple(rows))
