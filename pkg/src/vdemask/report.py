"""Plain-text budget report listing every intermediate of the three criteria."""

from __future__ import annotations

from dataclasses import dataclass

from .config import ScenarioConfig
from .criteria import ECC_FIELD_BANDWIDTH, Criterion, min_eirp
from .propagation import horizon_distance
from .scenario import Scenario
from .stations import Modulation, Role
from .units import DecibelQuantity, Kind, field_strength_to_pfd, rebandwidth


@dataclass(frozen=True)
class Row:
    name: str
    value: float
    unit: str
    ref: str = ""


def _bw(bw: float | None) -> str:
    return "" if bw is None else f"/{bw / 1e3:g}kHz"


def budget_rows(sc: Scenario) -> list[tuple[str, list[Row]]]:
    cfg: ScenarioConfig = sc.config
    env = cfg.environment
    params = cfg.criteria
    sections: list[tuple[str, list[Row]]] = []

    rows = [
        Row("T_s receiver", env.receiver_temp, "dBK"),
        Row("T_g galactic", env.galactic_temp, "dBK"),
        Row("T_m man-made", env.manmade_temp, "dBK"),
        Row("T", sc.system_temperature, "dBK", "T = T_s + T_g + T_m (linear)"),
    ]
    for role in Role:
        n = env.noise_power(cfg.station(role).channel_bandwidth)
        rows.append(Row(f"N {role.value} rx", n.value, "dBW" + _bw(n.ref_bandwidth), "N = kTB"))
    sections.append(("System noise", rows))

    rows = []
    for role in Role:
        lim = sc.in_limits[role]
        for item in lim.intermediates[1:]:
            rows.append(Row(f"{item.name} ({role.value})", item.value, item.unit, item.ref))
    sections.append(("ITU I/N criterion", rows))

    e25 = DecibelQuantity(params.ecc_field, Kind.FIELD_DBUV_PER_M, ECC_FIELD_BANDWIDTH)
    e_ref = rebandwidth(e25, params.reference_bandwidth)
    sections.append(
        (
            "ECC field-strength criterion",
            [
                Row("E", e25.value, "dBuV/m" + _bw(e25.ref_bandwidth), "coordination threshold"),
                Row("E (ref bw)", e_ref.value, "dBuV/m" + _bw(e_ref.ref_bandwidth), "rebandwidth"),
                Row(
                    "PFD threshold",
                    field_strength_to_pfd(e_ref).value,
                    "dBW/m2" + _bw(e_ref.ref_bandwidth),
                    "S = E^2/(120 pi)",
                ),
            ],
        )
    )

    base, mobile = cfg.station(Role.BASE), cfg.station(Role.MOBILE)
    ci_base = sc.ci_limits[Role.BASE]
    sections.append(
        (
            "Terrestrial path",
            [
                Row("horizon base", horizon_distance(base.antenna_height) / 1e3, "km", "sqrt(2 R_e h)"),
                Row("horizon mobile", horizon_distance(mobile.antenna_height) / 1e3, "km", "sqrt(2 R_e h)"),
                Row("d", ci_base.get("link distance"), "km", "sum of horizons"),
                Row("free-space loss", ci_base.get("free-space loss"), "dB", "(4 pi d / lambda)^2"),
                Row("excess loss", ci_base.get("excess loss"), "dB", "configured"),
                Row("L_land", ci_base.get("total path loss"), "dB", "free-space + excess"),
            ],
        )
    )

    for role in Role:
        lim = sc.ci_limits[role]
        peer = role.peer
        rows = [
            Row(f"EIRP digital {peer.value} tx", min_eirp(cfg.station(peer, Modulation.DIGITAL)), "dBW", "P_min + G - feeder"),
            Row(f"EIRP analog {peer.value} tx", min_eirp(cfg.station(peer, Modulation.ANALOG)), "dBW", "P_min + G - feeder"),
        ]
        skip = {"N", "link distance", "free-space loss", "excess loss", "total path loss", "digital min EIRP", "analog min EIRP"}
        for item in lim.intermediates:
            if item.name not in skip:
                rows.append(Row(item.name, item.value, item.unit, item.ref))
        rows.append(Row("C/I limit (ref bw)", rebandwidth(lim.i_max, params.reference_bandwidth).value,
                        "dBW" + _bw(params.reference_bandwidth), "rebandwidth"))
        sections.append((f"ITU C/I criterion, {role.value} receiver", rows))

    rows = []
    for crit in Criterion:
        for role in Role:
            m = sc.station_masks[(crit, role)]
            rows.append(Row(f"{m.label} at 0 deg", m.pfds[0], "dBW/m2/4kHz", "boresight mask"))
        env_mask = sc.envelope(crit)
        rows.append(Row(f"{env_mask.label} envelope at 0 deg", env_mask.pfds[0], "dBW/m2/4kHz", "min over roles"))
    sections.append(("PFD masks", rows))
    return sections


def render_budget(sc: Scenario) -> str:
    sections = budget_rows(sc)
    all_rows = [r for _, rows in sections for r in rows]
    name_w = max(len(r.name) for r in all_rows)
    unit_w = max(len(r.unit) for r in all_rows)
    out = []
    for title, rows in sections:
        out.append(f"== {title} ==")
        for r in rows:
            line = f"  {r.name:<{name_w}} = {r.value:>9.2f} {r.unit:<{unit_w}}"
            if r.ref:
                line += f"  {r.ref}"
            out.append(line.rstrip())
        out.append("")
    return "\n".join(out)
