import math

import pytest

from vdemask.compliance import SatelliteEmission, compliance_margin
from vdemask.errors import DataFileError
from vdemask.export import gain_csv, margins_csv, mask_csv, masks_csv, read_curve, read_mask, resample
from vdemask.mask import PfdMask
from vdemask.svg import line_chart

M = PfdMask("a", (0.0, 45.0, 90.0), (-150.004, -140.0, -130.5))


def test_single_mask_csv():
    assert mask_csv(M) == "theta_deg,pfd_dbw_m2_4khz\n0,-150.00\n45,-140.00\n90,-130.50\n"


def test_multi_mask_csv_with_reference():
    other = PfdMask("b", M.thetas, (-1.0, -2.0, -3.0))
    text = masks_csv([("pfd_itu_in", M), ("pfd_ecc", other)], [math.nan, -5.0, -6.0])
    lines = text.splitlines()
    assert lines[0] == "theta_deg,pfd_itu_in,pfd_ecc,pfd_reference"
    assert lines[1] == "0,-150.00,-1.00,"
    assert lines[3] == "90,-130.50,-3.00,-6.00"


def test_multi_mask_grid_mismatch():
    with pytest.raises(ValueError):
        masks_csv([("a", M), ("b", PfdMask("b", (0.0, 90.0), (-1.0, -1.0)))])


def test_gain_and_margins_csv():
    assert gain_csv([0.0], [8.15], [2.15]) == "theta_deg,gain_base_dbi,gain_mobile_dbi\n0,8.15,2.15\n"
    res = compliance_margin(M, SatelliteEmission(-20.0, 600e3))
    lines = margins_csv(res).splitlines()
    assert lines[0] == "theta_deg,mask_dbw_m2_4khz,sat_pfd_dbw_m2_4khz,margin_db"
    assert len(lines) == 4


def test_read_round_trip(tmp_path):
    p = tmp_path / "m.csv"
    p.write_text(mask_csv(M))
    back = read_mask(p)
    assert back.thetas == M.thetas
    assert back.pfds == pytest.approx(M.pfds, abs=0.005)


def test_read_named_column(tmp_path):
    p = tmp_path / "multi.csv"
    p.write_text("theta_deg,x,y\n0,1,2\n90,3,4\n")
    assert read_curve(p, "y") == ([0.0, 90.0], [2.0, 4.0])
    with pytest.raises(DataFileError):
        read_curve(p)
    with pytest.raises(DataFileError):
        read_curve(p, "z")


@pytest.mark.parametrize(
    "body",
    [
        "theta,pfd\n0,abc\n90,1\n",
        "theta,pfd\n0,1\n",
        "theta,pfd\n10,1\n5,1\n",
        "theta,pfd\n0,1\n90\n",
    ],
)
def test_malformed_reference(tmp_path, body):
    p = tmp_path / "bad.csv"
    p.write_text(body)
    with pytest.raises(DataFileError):
        read_curve(p)


def test_read_mask_enforces_span(tmp_path):
    p = tmp_path / "short.csv"
    p.write_text("theta,pfd\n0,1\n45,2\n")
    with pytest.raises(DataFileError):
        read_mask(p)


def test_resample():
    out = resample([10.0, 20.0, 40.0], [0.0, 10.0, 30.0], [0.0, 10.0, 15.0, 30.0, 40.0, 50.0])
    assert math.isnan(out[0]) and math.isnan(out[-1])
    assert out[1:5] == [0.0, 5.0, 20.0, 30.0]


def test_svg_chart():
    text = line_chart(
        [("I/N <min>", [0, 45, 90], [-160, -155, -150]), ("gappy", [0, 45, 90], [-150, math.nan, -140])],
        title="t",
        x_range=(0, 90),
    )
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    assert text.count("<polyline") == 1  # the gappy series has no two consecutive points
    assert "I/N &lt;min&gt;" in text
    with pytest.raises(ValueError):
        line_chart([("x", [0, 1], [math.nan, math.nan])])
