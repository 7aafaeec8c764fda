"""Decibel arithmetic with unit-kind tagging.

Every budget in the package is carried as a :class:`DecibelQuantity`.  Adding
a ratio to an absolute level is allowed, adding two absolute levels is not:
that is the classic link-budget bug and it raises :class:`UnitError`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import DomainError, UnitError

# 10*log10(120*pi): free-space wave impedance in dB-ohm.
FREE_SPACE_IMPEDANCE_DB = 10.0 * math.log10(120.0 * math.pi)

# dB(uV/m) -> dB(V/m)
_MICROVOLT_DB = 120.0


class Kind(enum.Enum):
    RATIO = "dB"
    POWER_DBW = "dBW"
    PFD_DBW_PER_M2 = "dBW/m2"
    GAIN_DBI = "dBi"
    TEMPERATURE_DBK = "dBK"
    FIELD_DBUV_PER_M = "dBuV/m"


def to_db(x: float) -> float:
    """Convert a positive linear power ratio to dB."""
    if not x > 0:
        raise DomainError(f"cannot take dB of non-positive value {x!r}")
    return 10.0 * math.log10(x)


def from_db(x: float) -> float:
    return 10.0 ** (x / 10.0)


def _check_bandwidth(bw: float | None, name: str = "bandwidth") -> None:
    if bw is not None and not (bw > 0 and math.isfinite(bw)):
        raise DomainError(f"{name} must be a positive finite number of Hz, got {bw!r}")


@dataclass(frozen=True)
class DecibelQuantity:
    """A dB value tagged with its unit kind and, optionally, a reference bandwidth in Hz."""

    value: float
    kind: Kind = Kind.RATIO
    ref_bandwidth: float | None = None

    def __post_init__(self) -> None:
        _check_bandwidth(self.ref_bandwidth, "ref_bandwidth")

    @property
    def is_ratio(self) -> bool:
        return self.kind is Kind.RATIO

    def __add__(self, other: DecibelQuantity) -> DecibelQuantity:
        if not isinstance(other, DecibelQuantity):
            raise UnitError(f"cannot add untagged {type(other).__name__} to {self.kind.value}")
        if self.is_ratio and other.is_ratio:
            return DecibelQuantity(self.value + other.value, Kind.RATIO, _merge_bw(self, other))
        if self.is_ratio:
            return DecibelQuantity(self.value + other.value, other.kind, other.ref_bandwidth)
        if other.is_ratio:
            return DecibelQuantity(self.value + other.value, self.kind, self.ref_bandwidth)
        raise UnitError(f"cannot add two absolute levels ({self.kind.value} + {other.kind.value})")

    def __sub__(self, other: DecibelQuantity) -> DecibelQuantity:
        if not isinstance(other, DecibelQuantity):
            raise UnitError(f"cannot subtract untagged {type(other).__name__} from {self.kind.value}")
        if other.is_ratio:
            return self + DecibelQuantity(-other.value, Kind.RATIO, other.ref_bandwidth)
        if self.kind is other.kind:
            if self.ref_bandwidth != other.ref_bandwidth:
                raise UnitError(
                    f"bandwidth mismatch: {self.ref_bandwidth} Hz vs {other.ref_bandwidth} Hz"
                )
            return DecibelQuantity(self.value - other.value, Kind.RATIO)
        raise UnitError(f"cannot subtract {other.kind.value} from {self.kind.value}")

    def __neg__(self) -> DecibelQuantity:
        if not self.is_ratio:
            raise UnitError(f"cannot negate an absolute level ({self.kind.value})")
        return replace(self, value=-self.value)

    def linear(self) -> float:
        return from_db(self.value)

    def __str__(self) -> str:
        unit = self.kind.value
        if self.ref_bandwidth is not None:
            unit += f" per {_format_bw(self.ref_bandwidth)}"
        return f"{self.value:.2f} {unit}"


def _merge_bw(a: DecibelQuantity, b: DecibelQuantity) -> float | None:
    if a.ref_bandwidth is not None and b.ref_bandwidth is not None and a.ref_bandwidth != b.ref_bandwidth:
        raise UnitError(f"bandwidth mismatch: {a.ref_bandwidth} Hz vs {b.ref_bandwidth} Hz")
    return a.ref_bandwidth if a.ref_bandwidth is not None else b.ref_bandwidth


def _format_bw(bw: float) -> str:
    if bw >= 1e3 and bw % 1e3 == 0:
        return f"{bw / 1e3:g} kHz"
    return f"{bw:g} Hz"


def ratio(value: float) -> DecibelQuantity:
    return DecibelQuantity(value, Kind.RATIO)


def dbw(value: float, bandwidth: float | None = None) -> DecibelQuantity:
    return DecibelQuantity(value, Kind.POWER_DBW, bandwidth)


def pfd(value: float, bandwidth: float | None = None) -> DecibelQuantity:
    return DecibelQuantity(value, Kind.PFD_DBW_PER_M2, bandwidth)


def rebandwidth(level: DecibelQuantity, target: float) -> DecibelQuantity:
    """Re-express a spectral level in another reference bandwidth.

    Assumes a flat spectral density across both bandwidths, so the level
    scales with 10*log10 of the bandwidth ratio.
    """
    if level.ref_bandwidth is None:
        raise DomainError(f"{level} has no reference bandwidth to rescale")
    _check_bandwidth(target, "target bandwidth")
    if target == level.ref_bandwidth:
        return level
    shifted = level.value - 10.0 * math.log10(level.ref_bandwidth / target)
    return DecibelQuantity(shifted, level.kind, target)


def field_strength_to_pfd(field: DecibelQuantity | float) -> DecibelQuantity:
    """Plane-wave power flux density for a field strength in dB(uV/m).

    S = E^2 / (120*pi).  The reference bandwidth, if any, is carried over.
    """
    if isinstance(field, DecibelQuantity):
        if field.kind is not Kind.FIELD_DBUV_PER_M:
            raise UnitError(f"expected a field strength in dBuV/m, got {field.kind.value}")
        value, bw = field.value, field.ref_bandwidth
    else:
        value, bw = float(field), None
    return pfd(value - _MICROVOLT_DB - FREE_SPACE_IMPEDANCE_DB, bw)
