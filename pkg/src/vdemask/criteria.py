"""Interference protection criteria for VHF land mobile receivers.

Three criteria produce a maximum tolerable interference level:

* I/N: interference a fixed margin below the receiver noise floor.
* ECC field strength: a coordination field strength turned directly into a PFD.
* C/I: the interference that still lets the weakest wanted carrier (minimum
  EIRP over the longest line-of-sight path) meet its digital C/(N+I) and
  analog SINAD requirements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .environment import NoiseEnvironment
from .errors import DomainError, InfeasibleBudgetError, UnitError
from .propagation import PathBudget, land_path
from .stations import Modulation, Role, StationProfile
from .units import DecibelQuantity, Kind, dbw, field_strength_to_pfd, from_db, ratio, rebandwidth, to_db

ECC_FIELD_BANDWIDTH = 25e3


class Criterion(enum.Enum):
    ITU_IN = "in"
    ECC_FIELD = "ecc"
    ITU_CI = "ci"


@dataclass(frozen=True)
class CriteriaParams:
    in_margin: float = -6.0
    ecc_field: float = 12.0  # dBuV/m per 25 kHz
    ebn0_required: float = 10.0
    # Symbol rate equal to the channel bandwidth gives 2*Rs/B = 2 (+3 dB) and
    # the usual 13 dB C/(N+I).  The nominal C4FM rate of 4800 Bd does not.
    symbol_rate: float = 15e3
    sinad: float = 12.0
    signal_to_distortion: float = 20.0
    polarization_relaxation: float = 3.0
    reference_bandwidth: float = 4e3

    def __post_init__(self) -> None:
        if not self.reference_bandwidth > 0:
            raise DomainError("reference_bandwidth must be positive")
        if not self.symbol_rate > 0:
            raise DomainError("symbol_rate must be positive")
        if not self.sinad > 0:
            raise DomainError("sinad must be > 0 dB")


@dataclass(frozen=True)
class Intermediate:
    """One named step of a budget, kept for reporting."""

    name: str
    value: float
    unit: str
    ref: str = ""

    @classmethod
    def of(cls, name: str, q: DecibelQuantity, ref: str = "") -> Intermediate:
        unit = q.kind.value
        if q.ref_bandwidth is not None:
            unit += f"/{q.ref_bandwidth / 1e3:g}kHz"
        return cls(name, q.value, unit, ref)


@dataclass(frozen=True)
class CriterionLimit:
    criterion: Criterion
    role: Role
    i_max: DecibelQuantity
    intermediates: tuple[Intermediate, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.i_max.ref_bandwidth is None:
            raise UnitError("a criterion limit must carry a reference bandwidth")

    def get(self, name: str) -> float:
        for item in self.intermediates:
            if item.name == name:
                return item.value
        raise KeyError(name)


def in_interference_limit(
    noise: DecibelQuantity, params: CriteriaParams, role: Role = Role.BASE
) -> CriterionLimit:
    """Interference limit from the I/N margin, in the reference bandwidth."""
    if noise.kind is not Kind.POWER_DBW or noise.ref_bandwidth is None:
        raise UnitError("noise must be a dBW level with a reference bandwidth")
    at_receiver = noise + ratio(params.in_margin)
    at_antenna = at_receiver + ratio(params.polarization_relaxation)
    in_ref = rebandwidth(at_antenna, params.reference_bandwidth)
    steps = (
        Intermediate.of("N", noise, "N = kTB"),
        Intermediate.of("I/N receiver limit", at_receiver, "I = N + mu"),
        Intermediate.of("I/N antenna limit", at_antenna, "I + polarization"),
        Intermediate.of("I/N limit (ref bw)", in_ref, "rebandwidth"),
    )
    return CriterionLimit(Criterion.ITU_IN, role, in_ref, steps)


def ecc_pfd_threshold(params: CriteriaParams) -> DecibelQuantity:
    """Coordination field strength as a PFD (dBW/m^2) in the reference bandwidth."""
    e = DecibelQuantity(params.ecc_field, Kind.FIELD_DBUV_PER_M, ECC_FIELD_BANDWIDTH)
    return field_strength_to_pfd(rebandwidth(e, params.reference_bandwidth))


def min_eirp(station: StationProfile) -> float:
    """Minimum EIRP in dBW: lowest transmit power, plus antenna gain, less feeder loss."""
    return to_db(station.tx_power_min) + station.antenna_gain - station.feeder_loss


def sensitivity(tx: StationProfile, rx: StationProfile, path_loss: float) -> float:
    """Weakest wanted carrier at the receiver input, in dBW."""
    if path_loss < 0:
        raise DomainError("path loss must be non-negative")
    return min_eirp(tx) - path_loss + rx.antenna_gain - rx.feeder_loss


def required_cnir_digital(ebn0: float, symbol_rate: float, bandwidth: float) -> float:
    if not symbol_rate > 0 or not bandwidth > 0:
        raise DomainError("symbol rate and bandwidth must be positive")
    return ebn0 + to_db(2.0 * symbol_rate / bandwidth)


def _level(x: DecibelQuantity | float) -> tuple[float, float | None]:
    if isinstance(x, DecibelQuantity):
        if x.kind is not Kind.POWER_DBW:
            raise UnitError(f"expected a dBW level, got {x.kind.value}")
        return x.value, x.ref_bandwidth
    return float(x), None


def digital_protection_ratio(c_min: float, noise: DecibelQuantity | float, zeta_d: float) -> float:
    """C/I (dB) that keeps C/(N+I) at ``zeta_d`` given the noise floor."""
    n, _ = _level(noise)
    c_over_n = c_min - n
    headroom = 1.0 / from_db(zeta_d) - from_db(-c_over_n)
    if headroom <= 0:
        raise InfeasibleBudgetError(
            f"digital carrier C/N of {c_over_n:.2f} dB cannot meet C/(N+I) of {zeta_d:.2f} dB",
            zeta_d - c_over_n,
        )
    return -to_db(headroom)


def digital_interference_limit(
    c_min: float, noise: DecibelQuantity | float, zeta_d: float
) -> DecibelQuantity:
    _, bw = _level(noise)
    return dbw(c_min - digital_protection_ratio(c_min, noise, zeta_d), bw)


def analog_protection_ratio(
    c_min: float, noise: DecibelQuantity | float, sinad: float, c_over_d: float
) -> float:
    """C/I (dB) that keeps the SINAD at ``sinad`` given noise and distortion."""
    n, _ = _level(noise)
    unwanted = from_db(n - c_min) + from_db(-c_over_d)
    allowed = 1.0 / (from_db(sinad) - 1.0)
    headroom = allowed - unwanted
    if headroom <= 0:
        raise InfeasibleBudgetError(
            f"analog carrier at {c_min:.2f} dBW cannot reach SINAD of {sinad:.2f} dB",
            to_db(unwanted / allowed),
        )
    return -to_db(headroom)


def analog_interference_limit(
    c_min: float, noise: DecibelQuantity | float, sinad: float, c_over_d: float
) -> DecibelQuantity:
    _, bw = _level(noise)
    return dbw(c_min - analog_protection_ratio(c_min, noise, sinad, c_over_d), bw)


def combined_ci_limit(
    digital: DecibelQuantity, analog: DecibelQuantity, polarization: float
) -> DecibelQuantity:
    if digital.ref_bandwidth != analog.ref_bandwidth:
        raise UnitError(
            f"bandwidth mismatch: {digital.ref_bandwidth} Hz vs {analog.ref_bandwidth} Hz"
        )
    worst = digital if digital.value <= analog.value else analog
    return worst + ratio(polarization)


def ci_limit(
    role: Role,
    stations: Mapping[tuple[Role, Modulation], StationProfile],
    env: NoiseEnvironment,
    params: CriteriaParams,
    excess_loss: float = 34.0,
) -> CriterionLimit:
    """Performance-based limit for receivers of ``role``, per channel bandwidth.

    The wanted carrier comes from the peer role at its minimum power over the
    longest line-of-sight path; the stricter of the digital and analog limits
    is relaxed by the polarization mismatch.
    """
    rx_d = stations[(role, Modulation.DIGITAL)]
    rx_a = stations[(role, Modulation.ANALOG)]
    tx_d = stations[(role.peer, Modulation.DIGITAL)]
    tx_a = stations[(role.peer, Modulation.ANALOG)]

    path: PathBudget = land_path(tx_d.antenna_height, rx_d.antenna_height, env.frequency, excess_loss)
    loss = path.total_loss
    noise = env.noise_power(rx_d.channel_bandwidth)
    zeta_d = required_cnir_digital(params.ebn0_required, params.symbol_rate, rx_d.channel_bandwidth)

    c_dig = sensitivity(tx_d, rx_d, loss)
    c_ana = sensitivity(tx_a, rx_a, loss)
    zeta_itu_d = digital_protection_ratio(c_dig, noise, zeta_d)
    zeta_itu_a = analog_protection_ratio(c_ana, noise, params.sinad, params.signal_to_distortion)
    bw = noise.ref_bandwidth
    i_dig = dbw(c_dig - zeta_itu_d, bw)
    i_ana = dbw(c_ana - zeta_itu_a, bw)
    combined = combined_ci_limit(i_dig, i_ana, params.polarization_relaxation)

    steps = (
        Intermediate.of("N", noise, "N = kTB"),
        Intermediate("link distance", path.distance / 1e3, "km", "d"),
        Intermediate.of("free-space loss", ratio(path.free_space_loss), "l"),
        Intermediate.of("excess loss", ratio(path.excess_loss), "dl"),
        Intermediate.of("total path loss", ratio(loss), "L = l + dl"),
        Intermediate.of("digital min EIRP", dbw(min_eirp(tx_d)), "EIRP"),
        Intermediate.of("analog min EIRP", dbw(min_eirp(tx_a)), "EIRP"),
        Intermediate.of("digital C_min", dbw(c_dig), "C_min"),
        Intermediate.of("analog C_min", dbw(c_ana), "C_min"),
        Intermediate.of("zeta_d", ratio(zeta_d), "C/(N+I)"),
        Intermediate.of("zeta_ITU-d", ratio(zeta_itu_d), "C/I digital"),
        Intermediate.of("zeta_ITU-a", ratio(zeta_itu_a), "C/I analog"),
        Intermediate.of("digital limit", i_dig, "I = C_min - zeta"),
        Intermediate.of("analog limit", i_ana, "I = C_min - zeta"),
        Intermediate.of("C/I limit", combined, "min + polarization"),
    )
    return CriterionLimit(Criterion.ITU_CI, role, combined, steps)
