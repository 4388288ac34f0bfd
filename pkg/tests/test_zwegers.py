import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import close
from mockchar.appell import phi
from mockchar.closed_forms import phi_add_closed_form, r_closed_form
from mockchar.qseries import theta
from mockchar.zwegers import gauss_E, phi_add, phi_tilde, phi_tilde_elliptic_check, r_function
from strategies import taus, zs

TAU, W = 0.13 + 0.87j, 0.21 - 0.07j

# mpmath brute force over |k| <= 60
FROZEN_R = {
    ("1/2", 1): 0.1907892604852219 + 0.13521971292516347j,
    ("3/2", 1): -0.36603931858368793 + 0.31955305448008897j,
    ("1/2", "1/2"): -0.07444485223743647 + 0.25348768825886j,
    (1, 2): 0.03052086171437683 + 0.08208445121173387j,
}
FROZEN_PHI_ADD = -0.06966773694965182 + 0.19419189187718255j  # [2,1] at (TAU, .17+.05i, .31-.1i, .2)


@pytest.mark.parametrize("jm", sorted(FROZEN_R, key=str))
def test_r_frozen(jm):
    assert abs(r_function(*jm, TAU, W) - FROZEN_R[jm]) < 1e-13


def test_phi_add_frozen():
    assert abs(phi_add(2, 1, TAU, 0.17 + 0.05j, 0.31 - 0.1j, 0.2) - FROZEN_PHI_ADD) < 1e-13


def test_gauss_E_is_odd_and_saturates():
    assert gauss_E(0) == 0
    assert abs(gauss_E(0.7) + gauss_E(-0.7)) < 1e-16
    assert abs(gauss_E(10) - 1) < 1e-15


@given(taus(), st.complex_numbers(max_magnitude=0.6), st.sampled_from([("1/2", 1), ("3/2", 1), ("1/2", "1/2"), (1, 2), ("-1/2", "3/2")]))
def test_r_matches_brute_force(tau, w, jm):
    j, m = jm
    assert close(r_function(j, m, tau, w), oracles.r_series(Fraction(j), Fraction(m), tau, w), 1e-11)


def test_r_survives_large_imaginary_w():
    # the Gaussian factor would overflow a naive evaluation of the bracket
    v = r_function("1/2", 1, 0.3j, 0.1 + 2.5j)
    assert math.isfinite(abs(v))
    assert close(v, oracles.r_series(0.5, 1, 0.3j, 0.1 + 2.5j), 1e-10)


@given(taus(), zs(), zs(), st.sampled_from([(2, 1), ("1/2", "1/2"), ("3/2", "1/2")]))
def test_phi_add_matches_brute_force(tau, z1, z2, ms):
    m, s = ms
    assert close(phi_add(m, s, tau, z1, z2, 0.1), oracles.phi_add(Fraction(m), Fraction(s), tau, z1, z2, 0.1), 1e-11)


@given(taus(), zs(), zs(), st.sampled_from([(2, 1), ("3/2", "1/2"), (1, 0)]))
def test_completion_is_s_independent(tau, z1, z2, ms):
    m, s = ms
    assert close(phi_tilde(m, s, tau, z1, z2), phi_tilde(m, Fraction(s) + 1, tau, z1, z2), 1e-10)


@given(taus(), zs(), zs())
def test_completion_swap_symmetry(tau, z1, z2):
    assert close(phi_tilde(2, 1, tau, z2, z1), phi_tilde(2, 1, tau, z1, z2), 1e-10)


@given(taus(), zs(), zs())
def test_completion_s_law(tau, z1, z2):
    lhs = phi_tilde(2, 1, -1 / tau, z1 / tau, z2 / tau)
    rhs = tau * cmath.exp(4j * math.pi * z1 * z2 / tau) * phi_tilde(2, 1, tau, z1, z2)
    assert close(lhs, rhs, 1e-9)


@given(taus(), zs(), st.integers(-1, 1), st.integers(-1, 1))
def test_completion_half_period_shift(tau, z, a, b):
    assert close(*phi_tilde_elliptic_check(2, 1, tau, z, a, b), 1e-9)


@given(taus(), zs(), zs(), st.sampled_from([0, 1, -1]))
def test_completion_is_trivial_at_level_one(tau, z1, z2, s):
    assert close(phi_tilde(1, s, tau, z1, z2), phi(1, s, tau, z1, z2), 1e-10)


@given(taus())
def test_r_closed_forms(tau):
    for shifted in (False, True):
        w = tau / 4 - (0.5 if shifted else 0)
        assert abs(r_function("1/2", 1, tau, w) - r_closed_form("1/2", shifted, tau)) < 1e-10
        assert abs(r_function("3/2", 1, tau, w)) < 1e-10


@given(taus(), zs(), st.booleans())
def test_correction_closed_form_against_theta11(tau, z, shifted):
    d = 0.5 if shifted else 0
    lhs = phi_add(1, "1/2", 2 * tau, z + tau / 2 - d, z - tau / 2 + d, tau / 8)
    assert close(lhs, (0.5 if shifted else 0.5j) * theta("11", tau, z), 1e-10)
    assert close(lhs, phi_add_closed_form(shifted, tau, z), 1e-10)
