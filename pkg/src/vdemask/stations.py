"""Land mobile station profiles and the typical VHF parameter set."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .antenna import AntennaPattern
from .errors import DomainError


class Role(enum.Enum):
    BASE = "base"
    MOBILE = "mobile"

    @property
    def peer(self) -> Role:
        return Role.MOBILE if self is Role.BASE else Role.BASE


class Modulation(enum.Enum):
    DIGITAL = "digital"  # C4FM
    ANALOG = "analog"  # FM


@dataclass(frozen=True)
class StationProfile:
    """One land station transmitting or receiving with a given modulation.

    Powers are in watts, gains and losses in dB, height in metres and the
    channel bandwidth in Hz.  ``tx_power_typical`` is informational only;
    budgets use the minimum power.
    """

    role: Role
    modulation: Modulation
    tx_power_min: float
    antenna_gain: float
    feeder_loss: float
    antenna_height: float
    channel_bandwidth: float = 15e3
    tx_power_typical: float | None = None
    sidelobe_param: float = 0.7

    def __post_init__(self) -> None:
        if not self.tx_power_min > 0:
            raise DomainError(f"{self.label}: tx_power_min must be positive")
        if self.tx_power_typical is not None and not self.tx_power_typical > 0:
            raise DomainError(f"{self.label}: tx_power_typical must be positive")
        if self.feeder_loss < 0:
            raise DomainError(f"{self.label}: feeder_loss must be >= 0")
        if self.antenna_height < 0:
            raise DomainError(f"{self.label}: antenna_height must be >= 0")
        if not (self.channel_bandwidth > 0 and math.isfinite(self.channel_bandwidth)):
            raise DomainError(f"{self.label}: channel_bandwidth must be positive")

    @property
    def label(self) -> str:
        return f"{self.modulation.value} {self.role.value}"

    @property
    def pattern(self) -> AntennaPattern:
        return AntennaPattern.from_peak_gain(self.antenna_gain, self.sidelobe_param)


def default_stations() -> dict[tuple[Role, Modulation], StationProfile]:
    """Typical VHF land mobile stations (156-162 MHz).

    The mobile analog minimum power is not tabulated in the source data and
    is taken as 1 W.
    """
    base = dict(antenna_gain=8.15, feeder_loss=2.0, antenna_height=65.0)
    mobile = dict(antenna_gain=2.15, feeder_loss=1.0, antenna_height=2.0)
    return {
        (Role.BASE, Modulation.DIGITAL): StationProfile(
            Role.BASE, Modulation.DIGITAL, tx_power_min=20.0, tx_power_typical=60.0, **base
        ),
        (Role.BASE, Modulation.ANALOG): StationProfile(
            Role.BASE, Modulation.ANALOG, tx_power_min=5.0, tx_power_typical=30.0, **base
        ),
        (Role.MOBILE, Modulation.DIGITAL): StationProfile(
            Role.MOBILE, Modulation.DIGITAL, tx_power_min=1.0, tx_power_typical=30.0, **mobile
        ),
        (Role.MOBILE, Modulation.ANALOG): StationProfile(
            Role.MOBILE, Modulation.ANALOG, tx_power_min=1.0, **mobile
        ),
    }
