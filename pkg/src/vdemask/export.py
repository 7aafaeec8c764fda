"""CSV reading and writing for masks, gain curves and compliance margins."""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Iterable, Sequence

from .compliance import ComplianceResult
from .errors import DataFileError
from .mask import PfdMask

SINGLE_MASK_COLUMN = "pfd_dbw_m2_4khz"


def _f(x: float) -> str:
    if math.isnan(x):
        return ""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _theta(t: float) -> str:
    return f"{t:g}"


def _render(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def mask_csv(mask: PfdMask) -> str:
    return _render(["theta_deg", SINGLE_MASK_COLUMN], ([_theta(t), _f(p)] for t, p in mask.samples))


def masks_csv(columns: Sequence[tuple[str, PfdMask]], reference: PfdMask | Sequence[float] | None = None) -> str:
    """Several masks on one grid, one column each, plus an optional reference overlay column."""
    if not columns:
        raise ValueError("no masks to export")
    grid = columns[0][1].thetas
    for name, m in columns:
        if m.thetas != grid:
            raise ValueError(f"mask '{name}' is on a different elevation grid")
    header = ["theta_deg"] + [name for name, _ in columns]
    ref_values: Sequence[float] | None = None
    if reference is not None:
        header.append("pfd_reference")
        ref_values = reference.pfds if isinstance(reference, PfdMask) else reference
    rows = []
    for i, t in enumerate(grid):
        row = [_theta(t)] + [_f(m.pfds[i]) for _, m in columns]
        if ref_values is not None:
            row.append(_f(ref_values[i]))
        rows.append(row)
    return _render(header, rows)


def gain_csv(grid: Sequence[float], base: Sequence[float], mobile: Sequence[float]) -> str:
    rows = ([_theta(t), _f(b), _f(m)] for t, b, m in zip(grid, base, mobile))
    return _render(["theta_deg", "gain_base_dbi", "gain_mobile_dbi"], rows)


def margins_csv(result: ComplianceResult) -> str:
    rows = ([_theta(t), _f(m), _f(s), _f(g)] for t, m, s, g in result.per_theta)
    return _render(["theta_deg", "mask_dbw_m2_4khz", "sat_pfd_dbw_m2_4khz", "margin_db"], rows)


def read_curve(path: str | Path, column: str | None = None) -> tuple[list[float], list[float]]:
    """Read (theta, value) pairs from a CSV with a header row.

    Uses ``column`` if given, else ``pfd_dbw_m2_4khz``, else the second
    column of a two-column file.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read {p}: {exc.strerror or exc}") from None
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and not r[0].lstrip().startswith("#")]
    if len(rows) < 3:
        raise DataFileError(f"{p}: need a header and at least two data rows")
    header = [h.strip() for h in rows[0]]
    if "theta_deg" in header:
        t_idx = header.index("theta_deg")
    else:
        t_idx = 0
    if column is not None:
        if column not in header:
            raise DataFileError(f"{p}: no column named '{column}'")
        v_idx = header.index(column)
    elif SINGLE_MASK_COLUMN in header:
        v_idx = header.index(SINGLE_MASK_COLUMN)
    elif len(header) == 2:
        v_idx = 1 - t_idx
    else:
        raise DataFileError(f"{p}: cannot tell which column holds the PFD values")
    thetas, values = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        try:
            thetas.append(float(row[t_idx]))
            values.append(float(row[v_idx]))
        except (IndexError, ValueError):
            raise DataFileError(f"{p}: malformed row {lineno}: {','.join(row)}") from None
    if any(not math.isfinite(x) for x in thetas + values):
        raise DataFileError(f"{p}: non-finite value")
    if any(b <= a for a, b in zip(thetas, thetas[1:])):
        raise DataFileError(f"{p}: elevations must be strictly increasing")
    return thetas, values


def read_mask(path: str | Path, label: str | None = None, column: str | None = None) -> PfdMask:
    thetas, values = read_curve(path, column)
    try:
        return PfdMask(label or column or Path(path).stem, tuple(thetas), tuple(values))
    except ValueError as exc:
        raise DataFileError(f"{path}: {exc}") from None


def resample(thetas: Sequence[float], values: Sequence[float], grid: Sequence[float]) -> list[float]:
    """Linear interpolation onto ``grid``; NaN outside the curve's elevation span."""
    out = []
    for g in grid:
        if g < thetas[0] or g > thetas[-1]:
            out.append(math.nan)
            continue
        j = 1
        while j < len(thetas) - 1 and thetas[j] < g:
            j += 1
        t0, t1 = thetas[j - 1], thetas[j]
        v0, v1 = values[j - 1], values[j]
        out.append(v0 + (v1 - v0) * (g - t0) / (t1 - t0))
    return out
