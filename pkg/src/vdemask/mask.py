"""PFD masks: maximum allowed power flux density versus elevation angle.

An interference power limit at the receiver becomes a PFD limit at the
antenna through the isotropic effective aperture lambda^2/(4*pi), the
feeder loss and the elevation gain.  Per-role masks are combined by taking
the pointwise minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .antenna import AntennaPattern, gain
from .criteria import CriterionLimit
from .errors import DomainError, UnitError
from .units import rebandwidth

REFERENCE_BANDWIDTH = 4e3


@dataclass(frozen=True)
class PfdMask:
    """Maximum allowed PFD (dBW/m^2 in ``ref_bandwidth``) sampled over elevation."""

    label: str
    thetas: tuple[float, ...]
    pfds: tuple[float, ...]
    ref_bandwidth: float = REFERENCE_BANDWIDTH

    def __post_init__(self) -> None:
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        object.__setattr__(self, "pfds", tuple(float(p) for p in self.pfds))
        if len(self.thetas) != len(self.pfds):
            raise DomainError("thetas and pfds differ in length")
        if len(self.thetas) < 2:
            raise DomainError("a mask needs at least two samples")
        if self.thetas[0] != 0.0 or self.thetas[-1] != 90.0:
            raise DomainError("mask must span exactly 0 to 90 degrees")
        if any(b <= a for a, b in zip(self.thetas, self.thetas[1:])):
            raise DomainError("mask elevations must be strictly increasing")
        if not all(math.isfinite(p) for p in self.pfds):
            raise DomainError("mask values must be finite")
        if not self.ref_bandwidth > 0:
            raise DomainError("ref_bandwidth must be positive")

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.thetas, self.pfds))

    def at(self, theta: float) -> float:
        """Linear interpolation in dB between samples."""
        if not 0.0 <= theta <= 90.0:
            raise DomainError(f"elevation must lie in [0, 90] degrees, got {theta!r}")
        ts = self.thetas
        lo, hi = 0, len(ts) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if ts[mid] <= theta:
                lo = mid
            else:
                hi = mid
        t0, t1 = ts[lo], ts[hi]
        p0, p1 = self.pfds[lo], self.pfds[hi]
        if theta == t1:
            return p1
        return p0 + (p1 - p0) * (theta - t0) / (t1 - t0)


def theta_grid(start: float = 0.0, end: float = 90.0, step: float = 0.5) -> list[float]:
    """Inclusive elevation grid; the last point is always ``end``."""
    if not step > 0:
        raise DomainError("theta step must be positive")
    if not 0.0 <= start < end <= 90.0:
        raise DomainError("theta range must satisfy 0 <= start < end <= 90")
    n = int(math.floor((end - start) / step + 1e-9))
    grid = [round(start + i * step, 10) for i in range(n + 1)]
    if grid[-1] < end:
        grid.append(end)
    return grid


def spreading_gain_db(wavelength: float) -> float:
    """10*log10(4*pi/lambda^2): inverse of the isotropic effective aperture."""
    if not wavelength > 0:
        raise DomainError(f"wavelength must be positive, got {wavelength!r}")
    return 10.0 * math.log10(4.0 * math.pi / wavelength**2)


def pfd_from_interference(
    i_max: float, feeder_loss: float, gain_at_theta: float, wavelength: float
) -> float:
    """PFD (dBW/m^2) at the antenna that delivers ``i_max`` dBW to the receiver."""
    return i_max + spreading_gain_db(wavelength) + feeder_loss - gain_at_theta


def station_mask(
    limit: CriterionLimit,
    pattern: AntennaPattern,
    feeder_loss: float,
    wavelength: float,
    grid: Sequence[float],
    label: str | None = None,
) -> PfdMask:
    i_max = limit.i_max
    if i_max.ref_bandwidth != REFERENCE_BANDWIDTH:
        i_max = rebandwidth(i_max, REFERENCE_BANDWIDTH)
    pfds = [
        pfd_from_interference(i_max.value, feeder_loss, gain(pattern, t), wavelength) for t in grid
    ]
    name = label or f"{limit.criterion.value} {limit.role.value}"
    return PfdMask(name, tuple(grid), tuple(pfds), REFERENCE_BANDWIDTH)


def ecc_mask(
    threshold: float,
    pattern: AntennaPattern,
    polarization: float,
    grid: Sequence[float],
    label: str = "ecc",
) -> PfdMask:
    """Coordination PFD threshold at boresight, relaxed by the gain roll-off."""
    g0 = pattern.peak_gain
    pfds = [threshold + (g0 - gain(pattern, t)) + polarization for t in grid]
    return PfdMask(label, tuple(grid), tuple(pfds), REFERENCE_BANDWIDTH)


def compose_min(masks: Sequence[PfdMask], label: str | None = None) -> PfdMask:
    if not masks:
        raise DomainError("compose_min needs at least one mask")
    first = masks[0]
    for m in masks[1:]:
        if m.thetas != first.thetas:
            raise DomainError(f"elevation grids differ between '{first.label}' and '{m.label}'")
        if m.ref_bandwidth != first.ref_bandwidth:
            raise UnitError(f"reference bandwidths differ between '{first.label}' and '{m.label}'")
    pfds = tuple(min(vals) for vals in zip(*(m.pfds for m in masks)))
    name = label or " & ".join(m.label for m in masks)
    return PfdMask(name, first.thetas, pfds, first.ref_bandwidth)
