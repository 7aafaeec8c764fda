import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from vdemask.environment import BOLTZMANN_DB, NoiseEnvironment, combine_noise_temperatures, noise_power
from vdemask.errors import DomainError


def test_combine_typical():
    assert combine_noise_temperatures([30, 24, 31]) == pytest.approx(34.0, abs=0.5)
    assert combine_noise_temperatures([30, 24, 31]) == pytest.approx(oracle.db(oracle.system_temperature_k()), abs=1e-12)


def test_combine_singleton_and_upper_range():
    assert combine_noise_temperatures([30]) == pytest.approx(30.0, abs=1e-12)
    # 1000 K + 251.19 K + 6309.57 K
    assert combine_noise_temperatures([30, 24, 38]) == pytest.approx(38.79, abs=0.005)


def test_combine_empty():
    with pytest.raises(DomainError):
        combine_noise_temperatures([])


temps = st.lists(st.floats(min_value=-50, max_value=80), min_size=1, max_size=6)


@given(temps)
def test_combine_bounds(ts):
    out = combine_noise_temperatures(ts)
    assert max(ts) - 1e-9 <= out <= max(ts) + oracle.db(len(ts)) + 1e-9


@given(temps, st.floats(min_value=-50, max_value=80))
def test_combine_monotone(ts, extra):
    assert combine_noise_temperatures(ts + [extra]) >= combine_noise_temperatures(ts)


@given(st.lists(st.floats(min_value=-50, max_value=80), min_size=1, max_size=4))
def test_combine_permutation_invariant(ts):
    ref = combine_noise_temperatures(ts)
    for perm in itertools.permutations(ts):
        assert combine_noise_temperatures(perm) == pytest.approx(ref, abs=1e-12)


def test_noise_power_examples():
    n = noise_power(33.97, 15e3)
    assert n.value == pytest.approx(-152.86, abs=0.01)
    assert n.ref_bandwidth == 15e3
    assert noise_power(0.0, 1.0).value == pytest.approx(-228.6, abs=0.005)
    assert noise_power(24.0, 4e3).value == pytest.approx(-168.58, abs=0.005)
    assert BOLTZMANN_DB == pytest.approx(-228.599, abs=1e-3)


def test_noise_power_against_kTB():
    env = NoiseEnvironment()
    expected = oracle.db(oracle.noise_w(oracle.system_temperature_k(), 15e3))
    assert env.noise_power(15e3).value == pytest.approx(expected, abs=1e-9)
    assert env.noise_power(15e3).value == pytest.approx(-153.0, abs=0.5)


@given(st.floats(min_value=-20, max_value=60), st.floats(min_value=1.0, max_value=1e9))
def test_noise_power_bandwidth_doubling(t, b):
    assert noise_power(t, 2 * b).value - noise_power(t, b).value == pytest.approx(oracle.db(2.0), abs=1e-9)


@pytest.mark.parametrize("b", [0.0, -1.0, float("inf")])
def test_noise_power_rejects_bad_bandwidth(b):
    with pytest.raises(DomainError):
        noise_power(30.0, b)


def test_environment_validation_and_wavelength():
    with pytest.raises(DomainError):
        NoiseEnvironment(frequency=0.0)
    with pytest.raises(DomainError):
        NoiseEnvironment(manmade_temp=float("nan"))
    assert NoiseEnvironment().wavelength == pytest.approx(1.88519, abs=1e-5)
