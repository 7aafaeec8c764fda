"""Scenario configuration: a sectioned TOML file with every key optional.

Example::

    [environment]
    manmade_temp = 38          # dBK

    [stations.mobile.analog]
    tx_power_min = 2.0         # W

Missing keys take the typical VHF land mobile values.  Unknown keys are
rejected so that typos do not silently fall back to defaults.
"""

from __future__ import annotations

import math
import re
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Callable

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .criteria import CriteriaParams
from .environment import NoiseEnvironment
from .errors import (
    ConfigError,
    ConfigNotFoundError,
    ConfigSyntaxError,
    DomainError,
    OutOfRangeError,
    UnknownKeyError,
)
from .stations import Modulation, Role, StationProfile, default_stations


@dataclass(frozen=True)
class MaskSettings:
    theta_start: float = 0.0
    theta_end: float = 90.0
    theta_step: float = 0.5
    reference_bandwidth: float = 4e3


@dataclass(frozen=True)
class ScenarioConfig:
    environment: NoiseEnvironment = field(default_factory=NoiseEnvironment)
    excess_path_loss: float = 34.0
    stations: dict[tuple[Role, Modulation], StationProfile] = field(default_factory=default_stations)
    criteria: CriteriaParams = field(default_factory=CriteriaParams)
    mask: MaskSettings = field(default_factory=MaskSettings)

    def station(self, role: Role, modulation: Modulation = Modulation.DIGITAL) -> StationProfile:
        return self.stations[(role, modulation)]


Check = Callable[[float], str | None]


def _positive(x: float) -> str | None:
    return None if x > 0 else "must be > 0"


def _non_negative(x: float) -> str | None:
    return None if x >= 0 else "must be >= 0"


def _finite(x: float) -> str | None:
    return None


def _elevation(x: float) -> str | None:
    return None if 0 <= x <= 90 else "must lie in [0, 90] degrees"


_ENVIRONMENT: dict[str, Check] = {
    "frequency": _positive,
    "receiver_temp": _finite,
    "galactic_temp": _finite,
    "manmade_temp": _finite,
    "excess_path_loss": _non_negative,
}
_STATION: dict[str, Check] = {
    "antenna_gain": _finite,
    "feeder_loss": _non_negative,
    "antenna_height": _non_negative,
    "channel_bandwidth": _positive,
    "sidelobe_param": _non_negative,
}
_POWER: dict[str, Check] = {"tx_power_min": _positive, "tx_power_typical": _positive}
_CRITERIA: dict[str, Check] = {
    "in_margin": _finite,
    "ecc_field": _finite,
    "ebn0_required": _finite,
    "symbol_rate": _positive,
    "sinad": _positive,
    "signal_to_distortion": _finite,
    "polarization_relaxation": _finite,
    "reference_bandwidth": _positive,
}
_MASK: dict[str, Check] = {
    "theta_start": _elevation,
    "theta_end": _elevation,
    "theta_step": _positive,
    "reference_bandwidth": _positive,
}


def _number(key: str, value: Any, check: Check) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise OutOfRangeError(key, value, "expected a number")
    x = float(value)
    if not math.isfinite(x):
        raise OutOfRangeError(key, value, "must be finite")
    problem = check(x)
    if problem:
        raise OutOfRangeError(key, value, problem)
    return x


def _table(key: str, value: Any) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise OutOfRangeError(key, value, "expected a table")
    return value


def _section(prefix: str, data: dict[str, Any], schema: dict[str, Check]) -> dict[str, float]:
    out = {}
    for k, v in data.items():
        key = f"{prefix}.{k}"
        if k not in schema:
            raise UnknownKeyError(key)
        out[k] = _number(key, v, schema[k])
    return out


def from_mapping(data: dict[str, Any]) -> ScenarioConfig:
    """Build a config from parsed TOML data, applying defaults and validation."""
    known = {"environment", "stations", "criteria", "mask"}
    for k in data:
        if k not in known:
            raise UnknownKeyError(k)

    env_values = _section("environment", _table("environment", data.get("environment", {})), _ENVIRONMENT)
    excess = env_values.pop("excess_path_loss", 34.0)
    env = NoiseEnvironment(**env_values)

    stations = default_stations()
    station_data = _table("stations", data.get("stations", {}))
    for role_name, role_block in station_data.items():
        try:
            role = Role(role_name)
        except ValueError:
            raise UnknownKeyError(f"stations.{role_name}") from None
        role_block = _table(f"stations.{role_name}", role_block)
        shared = {}
        per_mod: dict[Modulation, dict[str, float]] = {}
        for k, v in role_block.items():
            prefix = f"stations.{role_name}"
            if k in {m.value for m in Modulation}:
                per_mod[Modulation(k)] = _section(f"{prefix}.{k}", _table(f"{prefix}.{k}", v), _POWER)
            elif k in _STATION:
                shared[k] = _number(f"{prefix}.{k}", v, _STATION[k])
            else:
                raise UnknownKeyError(f"{prefix}.{k}")
        for mod in Modulation:
            stations[(role, mod)] = replace(stations[(role, mod)], **shared, **per_mod.get(mod, {}))

    criteria_values = _section("criteria", _table("criteria", data.get("criteria", {})), _CRITERIA)
    mask_values = _section("mask", _table("mask", data.get("mask", {})), _MASK)
    mask = MaskSettings(**mask_values)
    if mask.theta_start != 0.0 or mask.theta_end != 90.0:
        key = "mask.theta_start" if mask.theta_start != 0.0 else "mask.theta_end"
        value = mask.theta_start if mask.theta_start != 0.0 else mask.theta_end
        raise OutOfRangeError(key, value, "masks always span 0 to 90 degrees")
    if mask.reference_bandwidth != 4e3:
        raise OutOfRangeError("mask.reference_bandwidth", mask.reference_bandwidth, "PFD masks are defined per 4 kHz")

    try:
        return ScenarioConfig(env, excess, stations, CriteriaParams(**criteria_values), mask)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc


def loads(text: str, source: str = "<string>") -> ScenarioConfig:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        line = getattr(exc, "lineno", None)
        if line is None:
            m = re.search(r"line (\d+)", str(exc))
            line = int(m.group(1)) if m else None
        raise ConfigSyntaxError(source, line, str(exc)) from None
    return from_mapping(data)


def parse_config(path: str | Path) -> ScenarioConfig:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigNotFoundError(f"config file not found: {p}") from None
    except OSError as exc:
        raise ConfigNotFoundError(f"cannot read config file {p}: {exc.strerror}") from None
    return loads(text, str(p))


def _fmt(x: float) -> str:
    return repr(float(x))


def dumps(config: ScenarioConfig) -> str:
    """Serialize every setting, defaults included; ``loads(dumps(c)) == c``."""
    lines = ["[environment]"]
    env = asdict(config.environment)
    for k in ("frequency", "receiver_temp", "galactic_temp", "manmade_temp"):
        lines.append(f"{k} = {_fmt(env[k])}")
    lines.append(f"excess_path_loss = {_fmt(config.excess_path_loss)}")
    for role in Role:
        shared = config.station(role)
        lines += ["", f"[stations.{role.value}]"]
        for k in _STATION:
            lines.append(f"{k} = {_fmt(getattr(shared, k))}")
        for mod in Modulation:
            st = config.station(role, mod)
            lines += ["", f"[stations.{role.value}.{mod.value}]", f"tx_power_min = {_fmt(st.tx_power_min)}"]
            if st.tx_power_typical is not None:
                lines.append(f"tx_power_typical = {_fmt(st.tx_power_typical)}")
    lines += ["", "[criteria]"]
    for f in fields(CriteriaParams):
        lines.append(f"{f.name} = {_fmt(getattr(config.criteria, f.name))}")
    lines += ["", "[mask]"]
    for f in fields(MaskSettings):
        lines.append(f"{f.name} = {_fmt(getattr(config.mask, f.name))}")
    return "\n".join(lines) + "\n"
