"""Command line interface: ``vdemask budget|mask|check``.

Exit status is 0 on success, 1 for usage, configuration or file errors and 2
when a C/I budget is infeasible.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import export, svg
from .compliance import SatelliteEmission, compliance_margin
from .config import ScenarioConfig, parse_config
from .criteria import Criterion
from .errors import InfeasibleBudgetError, VdeMaskError
from .report import render_budget
from .scenario import ENVELOPE_LABELS, evaluate
from .stations import Role

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2

CSV_COLUMNS = {
    Criterion.ITU_IN: "pfd_itu_in",
    Criterion.ECC_FIELD: "pfd_ecc",
    Criterion.ITU_CI: "pfd_itu_ci",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _criteria_list(text: str) -> list[Criterion]:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            crit = Criterion(part)
        except ValueError:
            raise argparse.ArgumentTypeError(f"unknown criterion '{part}' (choose from in, ecc, ci)") from None
        if crit not in out:
            out.append(crit)
    if not out:
        raise argparse.ArgumentTypeError("at least one criterion is required")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vdemask", description="PFD protection masks for VHF land mobile receivers.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="scenario TOML file (default: $VDEMASK_CONFIG or built-in values)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("budget", parents=[common], help="print every intermediate of the three criteria")

    m = sub.add_parser("mask", parents=[common], help="write PFD masks as CSV and optionally SVG")
    m.add_argument("--criteria", type=_criteria_list, default=list(Criterion), help="comma list of in,ecc,ci")
    m.add_argument("--out", type=Path, help="CSV output path (default: stdout)")
    m.add_argument("--svg", type=Path, help="also write an SVG chart here")
    m.add_argument("--reference", type=Path, help="overlay mask CSV (theta_deg, pfd)")
    m.add_argument("--emit-gain", type=Path, metavar="PATH", help="write base/mobile antenna gain CSV here")

    c = sub.add_parser("check", parents=[common], help="check a satellite emission against a mask")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--mask", type=Path, help="mask CSV to check against")
    src.add_argument("--criterion", choices=[x.value for x in Criterion], help="compute this envelope mask")
    c.add_argument("--column", help="PFD column to read from a multi-column mask CSV")
    c.add_argument("--sat-eirp", type=float, required=True, help="satellite EIRP density, dBW per 4 kHz")
    c.add_argument("--altitude-km", type=float, required=True, help="orbit altitude in km")
    c.add_argument("--out", type=Path, help="write per-elevation margins CSV here")
    return p


def load_config(path: Path | None) -> ScenarioConfig:
    if path is None and os.environ.get("VDEMASK_CONFIG"):
        path = Path(os.environ["VDEMASK_CONFIG"])
    return parse_config(path) if path is not None else ScenarioConfig()


def _write(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise VdeMaskError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_budget(args: argparse.Namespace) -> int:
    sc = evaluate(load_config(args.config))
    sys.stdout.write(render_budget(sc))
    return EXIT_OK


def cmd_mask(args: argparse.Namespace) -> int:
    sc = evaluate(load_config(args.config))
    columns = [(CSV_COLUMNS[c], sc.envelope(c)) for c in args.criteria]
    ref_values = None
    if args.reference is not None:
        thetas, values = export.read_curve(args.reference)
        ref_values = export.resample(thetas, values, sc.grid)
    if len(columns) == 1 and ref_values is None:
        _write(args.out, export.mask_csv(columns[0][1]))
    else:
        _write(args.out, export.masks_csv(columns, ref_values))

    if args.svg is not None:
        series = [(ENVELOPE_LABELS[c], sc.grid, sc.envelope(c).pfds) for c in args.criteria]
        if ref_values is not None:
            series.append((args.reference.stem, sc.grid, ref_values))
        chart = svg.line_chart(
            series,
            title="Maximum allowed PFD versus elevation",
            x_label="elevation angle (deg)",
            y_label="PFD (dBW/m2 per 4 kHz)",
            x_range=(0.0, 90.0),
        )
        _write(args.svg, chart)
    if args.emit_gain is not None:
        curves = sc.gain_curves()
        _write(args.emit_gain, export.gain_csv(sc.grid, curves[Role.BASE], curves[Role.MOBILE]))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if args.mask is not None:
        mask = export.read_mask(args.mask, column=args.column)
    else:
        sc = evaluate(load_config(args.config))
        mask = sc.envelope(Criterion(args.criterion))
    emission = SatelliteEmission(args.sat_eirp, args.altitude_km * 1e3)
    result = compliance_margin(mask, emission)
    verdict = "COMPLIES" if result.compliant else "EXCEEDS"
    print(
        f"{verdict}: minimum margin {result.min_margin:.2f} dB at {result.worst_theta:g} deg "
        f"against '{mask.label}' (EIRP {args.sat_eirp:g} dBW/4kHz, altitude {args.altitude_km:g} km)"
    )
    if args.out is not None:
        _write(args.out, export.margins_csv(result))
    return EXIT_OK


COMMANDS = {"budget": cmd_budget, "mask": cmd_mask, "check": cmd_check}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except InfeasibleBudgetError as exc:
        print(f"vdemask: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except VdeMaskError as exc:
        print(f"vdemask: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
