import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from conftest import close
from mockchar.appell import denominator_product, phi, phi1, phi2, phi_double_tau, phi_s_shift_difference
from mockchar.base import PoleError, half
from strategies import taus, zs

TAU, Z1, Z2, T = 0.13 + 0.87j, 0.17 + 0.05j, 0.31 - 0.1j, 0.2

# mpmath brute force over |j| <= 60
FROZEN = {
    (1, 0): 1.0339419254610507 + 0.2672779468958363j,
    (2, 1): 0.5723248194960985 - 0.9032273792119073j,
    ("3/2", -1): -2.232122434919193 - 0.6982392112394668j,
    ("1/2", "1/2"): 0.9532452540668345 + 1.1198464456183252j,
}
INDICES = [(1, 0), ("1/2", "1/2"), (2, 1), (2, "1/2"), ("3/2", -1), (3, "3/2")]


@pytest.mark.parametrize("ms", sorted(FROZEN, key=str))
def test_phi_frozen(ms):
    m, s = ms
    assert abs(phi(m, s, TAU, Z1, Z2, T) - FROZEN[ms]) < 1e-13


def test_level_one_example_value():
    assert abs(phi(1, 0, 0.9j, 0.17, 0.31, 0) - 1.186087330512887j) < 1e-13


@given(taus(), zs(), zs(), st.sampled_from(INDICES))
def test_phi_matches_brute_force(tau, z1, z2, ms):
    m, s = ms
    assume(abs(z1.imag) < 0.15 and abs(z2.imag) < 0.15)
    got = phi(m, s, tau, z1, z2, 0.1)
    want = oracles.appell(Fraction(m), Fraction(s), tau, z1, z2, 0.1)
    assert close(got, want, 1e-11)


@given(taus(), zs(), zs(), st.floats(-1, 1))
def test_phi_is_difference_and_t_is_a_phase(tau, z1, z2, t):
    assert phi(2, 1, tau, z1, z2, t) == phi1(2, 1, tau, z1, z2, t) - phi2(2, 1, tau, z1, z2, t)
    assert close(phi(2, 1, tau, z1, z2, t), cmath.exp(-4j * math.pi * t) * phi(2, 1, tau, z1, z2, 0), 1e-13)


@given(taus(), zs(), zs(), st.sampled_from([0, 1, -1]))
def test_denominator_identity(tau, z1, z2, s):
    assert close(phi(1, s, tau, z1, z2, 0.3), denominator_product(tau, z1, z2, 0.3), 1e-10)


@given(taus(), zs(), zs(), st.sampled_from([(2, 1), (2, "1/2"), ("3/2", -1)]), st.integers(1, 3))
def test_s_shift_difference_is_theta_combination(tau, z1, z2, ms, a):
    m, s = ms
    direct = phi(m, s, tau, z1, z2) - phi(m, half(s) + a, tau, z1, z2)
    assert close(direct, phi_s_shift_difference(m, s, tau, z1, z2, 0, a), 1e-10)


def test_pole_detection():
    with pytest.raises(PoleError):
        phi(1, 0, 0.9j, 0.0, 0.31)
    with pytest.raises(PoleError):
        phi(2, 1, 0.9j, 0.9j, 0.31)
    with pytest.raises(PoleError):
        denominator_product(0.9j, 1.0, 0.2)


def test_phi_rejects_non_positive_level():
    with pytest.raises(ValueError):
        phi(0, 0, 1j, 0.1, 0.2)


@given(taus(), zs(), zs(), st.sampled_from([(1, 0), ("1/2", "1/2"), (1, "1/2")]))
def test_argument_doubling(tau, z1, z2, ms):
    m, s = ms
    assert close(phi(m, s, 2 * tau, z1, z2, 0.1), phi_double_tau(m, s, tau, z1, z2, 0.1), 1e-10)
