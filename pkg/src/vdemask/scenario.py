"""End-to-end evaluation of a scenario: limits per criterion and role, then masks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .antenna import gain
from .config import ScenarioConfig
from .criteria import (
    Criterion,
    CriterionLimit,
    ci_limit,
    ecc_pfd_threshold,
    in_interference_limit,
)
from .environment import combine_noise_temperatures
from .mask import REFERENCE_BANDWIDTH, PfdMask, compose_min, ecc_mask, station_mask, theta_grid
from .stations import Role
from .units import DecibelQuantity, rebandwidth

ENVELOPE_LABELS = {
    Criterion.ITU_IN: "ITU I/N",
    Criterion.ECC_FIELD: "ECC field strength",
    Criterion.ITU_CI: "ITU C/I",
}


@dataclass
class Scenario:
    config: ScenarioConfig
    grid: list[float]
    system_temperature: float
    in_limits: dict[Role, CriterionLimit]
    ecc_threshold: DecibelQuantity
    ci_limits: dict[Role, CriterionLimit]
    station_masks: dict[tuple[Criterion, Role], PfdMask] = field(default_factory=dict)

    def envelope(self, criterion: Criterion) -> PfdMask:
        masks = [self.station_masks[(criterion, role)] for role in Role]
        return compose_min(masks, label=ENVELOPE_LABELS[criterion])

    def gain_curves(self) -> dict[Role, list[float]]:
        return {
            role: [gain(self.config.station(role).pattern, t) for t in self.grid] for role in Role
        }


def limits(config: ScenarioConfig) -> tuple[dict[Role, CriterionLimit], DecibelQuantity, dict[Role, CriterionLimit]]:
    """Interference limits for every criterion; raises InfeasibleBudgetError on a broken C/I budget."""
    env = config.environment
    params = config.criteria
    in_limits = {
        role: in_interference_limit(env.noise_power(config.station(role).channel_bandwidth), params, role)
        for role in Role
    }
    ecc = ecc_pfd_threshold(params)
    ci = {role: ci_limit(role, config.stations, env, params, config.excess_path_loss) for role in Role}
    return in_limits, ecc, ci


def evaluate(config: ScenarioConfig | None = None) -> Scenario:
    config = config or ScenarioConfig()
    env = config.environment
    grid = theta_grid(config.mask.theta_start, config.mask.theta_end, config.mask.theta_step)
    in_limits, ecc, ci = limits(config)
    temperature = combine_noise_temperatures([env.receiver_temp, env.galactic_temp, env.manmade_temp])
    sc = Scenario(config, grid, temperature, in_limits, ecc, ci)

    ecc_ref = rebandwidth(ecc, REFERENCE_BANDWIDTH)
    lam = env.wavelength
    for role in Role:
        st = config.station(role)
        pattern = st.pattern
        sc.station_masks[(Criterion.ITU_IN, role)] = station_mask(
            in_limits[role], pattern, st.feeder_loss, lam, grid, label=f"ITU I/N {role.value}"
        )
        sc.station_masks[(Criterion.ITU_CI, role)] = station_mask(
            ci[role], pattern, st.feeder_loss, lam, grid, label=f"ITU C/I {role.value}"
        )
        sc.station_masks[(Criterion.ECC_FIELD, role)] = ecc_mask(
            ecc_ref.value, pattern, config.criteria.polarization_relaxation, grid, label=f"ECC {role.value}"
        )
    return sc
