import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracle
from oracle import db, lin
from vdemask.config import ScenarioConfig
from vdemask.criteria import (
    CriteriaParams,
    Criterion,
    CriterionLimit,
    analog_interference_limit,
    analog_protection_ratio,
    ci_limit,
    combined_ci_limit,
    digital_interference_limit,
    digital_protection_ratio,
    ecc_pfd_threshold,
    in_interference_limit,
    min_eirp,
    required_cnir_digital,
    sensitivity,
)
from vdemask.environment import NoiseEnvironment
from vdemask.errors import DomainError, InfeasibleBudgetError, UnitError
from vdemask.stations import Modulation, Role, StationProfile, default_stations
from vdemask.units import dbw, pfd, rebandwidth

STATIONS = default_stations()
BASE_D = STATIONS[(Role.BASE, Modulation.DIGITAL)]
MOBILE_D = STATIONS[(Role.MOBILE, Modulation.DIGITAL)]


class TestInterferenceToNoise:
    def test_chain(self):
        lim = in_interference_limit(dbw(-152.86, 15e3), CriteriaParams())
        assert lim.get("I/N receiver limit") == pytest.approx(-158.86, abs=1e-9)
        assert lim.get("I/N antenna limit") == pytest.approx(-155.86, abs=1e-9)
        assert lim.i_max.value == pytest.approx(-161.60, abs=0.005)
        assert lim.i_max.ref_bandwidth == 4e3
        assert lim.criterion is Criterion.ITU_IN

    def test_no_margin_identity(self):
        params = CriteriaParams(in_margin=0.0, polarization_relaxation=0.0, reference_bandwidth=15e3)
        assert in_interference_limit(dbw(-150.0, 15e3), params).i_max == dbw(-150.0, 15e3)

    def test_derived(self):
        assert in_interference_limit(dbw(-150.0, 15e3), CriteriaParams()).i_max.value == pytest.approx(-158.74, abs=0.005)

    def test_linear_oracle(self):
        n = NoiseEnvironment().noise_power(15e3)
        expected = db(oracle.in_limit_w(oracle.noise_w(oracle.system_temperature_k(), 15e3)))
        assert in_interference_limit(n, CriteriaParams()).i_max.value == pytest.approx(expected, abs=1e-9)

    def test_needs_banded_noise(self):
        with pytest.raises(UnitError):
            in_interference_limit(dbw(-150.0), CriteriaParams())
        with pytest.raises(UnitError):
            in_interference_limit(pfd(-150.0, 15e3), CriteriaParams())


class TestEcc:
    def test_threshold(self):
        t = ecc_pfd_threshold(CriteriaParams())
        assert t.value == pytest.approx(-141.72, abs=0.005)
        assert t.value == pytest.approx(db(oracle.ecc_pfd_w_m2()), abs=1e-9)
        assert t.ref_bandwidth == 4e3

    def test_impedance_identity(self):
        t = ecc_pfd_threshold(CriteriaParams(ecc_field=145.76 + 10 * math.log10(25 / 4)))
        assert t.value == pytest.approx(0.0, abs=0.005)

    def test_no_rebandwidth(self):
        t = ecc_pfd_threshold(CriteriaParams(ecc_field=12.0, reference_bandwidth=25e3))
        assert t.value == pytest.approx(-133.76, abs=0.005)


class TestCarrier:
    def test_min_eirp(self):
        assert min_eirp(BASE_D) == pytest.approx(19.16, abs=0.005)
        assert min_eirp(MOBILE_D) == pytest.approx(1.15, abs=1e-9)
        unit = StationProfile(Role.BASE, Modulation.DIGITAL, 1.0, 0.0, 0.0, 10.0)
        assert min_eirp(unit) == 0.0
        # linear: 20 W * 10^0.815 / 10^0.2
        assert min_eirp(BASE_D) == pytest.approx(db(20.0 * lin(8.15) / lin(2.0)), abs=1e-9)

    def test_sensitivity(self):
        assert sensitivity(BASE_D, MOBILE_D, 141.1) == pytest.approx(-120.8, abs=0.02)
        assert sensitivity(MOBILE_D, BASE_D, 141.1) == pytest.approx(-133.8, abs=0.02)
        unit = StationProfile(Role.BASE, Modulation.DIGITAL, 1.0, 0.0, 0.0, 10.0)
        assert sensitivity(unit, unit, 0.0) == 0.0
        expected = db(oracle.carrier_w(20.0, 8.15, 2.0, lin(141.1), 2.15, 1.0))
        assert sensitivity(BASE_D, MOBILE_D, 141.1) == pytest.approx(expected, abs=1e-9)

    def test_required_cnir(self):
        assert required_cnir_digital(10.0, 15e3, 15e3) == pytest.approx(13.01, abs=0.005)
        assert required_cnir_digital(7.5, 7.5e3, 15e3) == pytest.approx(7.5, abs=1e-12)
        assert required_cnir_digital(10.0, 4800.0, 15e3) == pytest.approx(8.06, abs=0.005)
        with pytest.raises(DomainError):
            required_cnir_digital(10.0, 0.0, 15e3)


class TestDigital:
    @pytest.mark.parametrize("c_min, expected", [(-120.8, -133.9), (-133.8, -148.0)])
    def test_examples(self, c_min, expected):
        out = digital_interference_limit(c_min, dbw(-152.86, 15e3), 13.01)
        assert out.value == pytest.approx(expected, abs=0.06)
        assert out.value == pytest.approx(db(oracle.digital_limit_w(lin(c_min), lin(-152.86), lin(13.01))), abs=1e-9)
        assert out.ref_bandwidth == 15e3

    def test_noise_free_asymptote(self):
        assert digital_interference_limit(-120.0, -300.0, 13.0).value == pytest.approx(-133.0, abs=1e-9)

    def test_infeasible(self):
        with pytest.raises(InfeasibleBudgetError) as exc:
            digital_interference_limit(-140.0, dbw(-152.0, 15e3), 13.0)
        assert exc.value.shortfall_db == pytest.approx(1.0, abs=1e-9)
        assert "shortfall 1.00 dB" in str(exc.value)

    @given(
        st.floats(min_value=-160, max_value=-60),
        st.floats(min_value=-200, max_value=-100),
        st.floats(min_value=-5, max_value=30),
    )
    def test_protection_ratio_at_least_zeta(self, c, n, z):
        assume(c - n > z + 1e-6)
        try:
            zz = digital_protection_ratio(c, n, z)
        except InfeasibleBudgetError:
            return  # headroom lost to rounding right at the edge
        assert lin(zz) >= lin(z) * (1 - 1e-12)

    @given(
        st.floats(min_value=-140, max_value=-80),
        st.floats(min_value=0.01, max_value=10),
        st.floats(min_value=5, max_value=20),
    )
    def test_monotone(self, c, dc, z):
        n = -170.0
        assert digital_interference_limit(c + dc, n, z).value > digital_interference_limit(c, n, z).value
        assert digital_interference_limit(c, n, z + dc).value < digital_interference_limit(c, n, z).value


class TestAnalog:
    @pytest.mark.parametrize("c_min, expected", [(-126.8, -139.4), (-133.8, -147.3)])
    def test_examples(self, c_min, expected):
        out = analog_interference_limit(c_min, dbw(-152.86, 15e3), 12.0, 20.0)
        assert out.value == pytest.approx(expected, abs=0.06)
        assert out.value == pytest.approx(
            db(oracle.analog_limit_w(lin(c_min), lin(-152.86), lin(12.0), lin(20.0))), abs=1e-9
        )

    def test_clean_asymptote(self):
        out = analog_interference_limit(-100.0, -400.0, 12.0, 400.0)
        assert out.value == pytest.approx(-100.0 - db(lin(12.0) - 1.0), abs=1e-9)

    def test_infeasible(self):
        with pytest.raises(InfeasibleBudgetError):
            analog_protection_ratio(-150.0, -152.0, 12.0, 20.0)
        with pytest.raises(InfeasibleBudgetError):
            # distortion alone exceeds the SINAD allowance
            analog_protection_ratio(-100.0, -300.0, 12.0, 10.0)


class TestCombined:
    def test_examples(self):
        mob = combined_ci_limit(dbw(-133.9, 15e3), dbw(-139.4, 15e3), 3.0)
        base = combined_ci_limit(dbw(-148.0, 15e3), dbw(-147.3, 15e3), 3.0)
        assert mob.value == pytest.approx(-136.4, abs=1e-9)
        assert base.value == pytest.approx(-145.0, abs=1e-9)
        assert combined_ci_limit(dbw(-140.0, 15e3), dbw(-140.0, 15e3), 0.0) == dbw(-140.0, 15e3)

    def test_bandwidth_mismatch(self):
        with pytest.raises(UnitError):
            combined_ci_limit(dbw(-140.0, 15e3), dbw(-140.0, 4e3), 3.0)

    @given(st.floats(min_value=-200, max_value=-50), st.floats(min_value=-200, max_value=-50), st.floats(min_value=-10, max_value=10))
    def test_symmetric(self, x, y, p):
        assert combined_ci_limit(dbw(x, 15e3), dbw(y, 15e3), p) == combined_ci_limit(dbw(y, 15e3), dbw(x, 15e3), p)


@pytest.fixture(scope="module")
def chain():
    return oracle.default_chain()


class TestScenarioLimits:
    @pytest.mark.parametrize("role", list(Role))
    def test_ci_limit_matches_oracle(self, chain, role):
        cfg = ScenarioConfig()
        lim = ci_limit(role, cfg.stations, cfg.environment, cfg.criteria, cfg.excess_path_loss)
        r = role.value
        assert lim.get("digital C_min") == pytest.approx(chain[f"C_min digital {r}"], abs=1e-9)
        assert lim.get("analog C_min") == pytest.approx(chain[f"C_min analog {r}"], abs=1e-9)
        assert lim.get("digital limit") == pytest.approx(chain[f"digital {r}"], abs=1e-9)
        assert lim.get("analog limit") == pytest.approx(chain[f"analog {r}"], abs=1e-9)
        assert lim.i_max.value == pytest.approx(chain[f"combined {r}"], abs=1e-9)
        assert lim.get("total path loss") == pytest.approx(chain["L"], abs=1e-9)

    @pytest.mark.parametrize("role", list(Role))
    def test_combined_recomputable_from_intermediates(self, role):
        cfg = ScenarioConfig()
        lim = ci_limit(role, cfg.stations, cfg.environment, cfg.criteria)
        expected = min(lim.get("digital limit"), lim.get("analog limit")) + cfg.criteria.polarization_relaxation
        assert lim.i_max.value == expected

    @pytest.mark.parametrize("role", list(Role))
    def test_in_stricter_than_ci(self, role):
        cfg = ScenarioConfig()
        ci = ci_limit(role, cfg.stations, cfg.environment, cfg.criteria)
        inl = in_interference_limit(cfg.environment.noise_power(15e3), cfg.criteria, role)
        assert inl.i_max.value < rebandwidth(ci.i_max, 4e3).value

    def test_limit_needs_bandwidth(self):
        with pytest.raises(UnitError):
            CriterionLimit(Criterion.ITU_CI, Role.BASE, dbw(-140.0))

    def test_params_validation(self):
        with pytest.raises(DomainError):
            CriteriaParams(sinad=0.0)
        with pytest.raises(DomainError):
            CriteriaParams(symbol_rate=-1.0)
        with pytest.raises(DomainError):
            CriteriaParams(reference_bandwidth=0.0)
