import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mockchar.base import (
    DEFAULT_PARAMS,
    EvalParams,
    HalfInt,
    NonFiniteValue,
    TauPoint,
    TruncationExceeded,
    check_tau,
    half,
    log1m_exp,
    q_pow,
    window_sum,
)


def test_halfint_stores_twice_the_value():
    assert float(HalfInt(3)) == 1.5
    assert half("3/2") == HalfInt(3)
    assert half(2) == HalfInt(4)
    assert half(Fraction(-1, 2)) == HalfInt(-1)
    assert str(HalfInt(3)) == "3/2" and str(HalfInt(4)) == "2"


def test_halfint_rejects_non_half_values():
    with pytest.raises(ValueError):
        half("1/3")
    with pytest.raises(TypeError):
        HalfInt(True)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_halfint_arithmetic_matches_fractions(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).as_fraction() == Fraction(a, 2) + Fraction(b, 2)
    assert (x - y).as_fraction() == Fraction(a, 2) - Fraction(b, 2)
    assert (-x).as_fraction() == -Fraction(a, 2)
    assert (3 * x).as_fraction() == 3 * Fraction(a, 2)
    assert x.is_integer() == (a % 2 == 0)


def test_tau_must_be_in_upper_half_plane():
    assert check_tau(0.1 + 2j) == 0.1 + 2j
    for bad in (0.3, -1j, complex("nan+1j"), complex(0, math.inf)):
        with pytest.raises(ValueError):
            TauPoint(bad)


def test_eval_params_defaults_and_validation():
    assert DEFAULT_PARAMS.as_dict() == {"term_tol": 1e-16, "max_terms": 4096, "pole_eps": 1e-10, "consecutive_small": 3}
    for kw in ({"term_tol": 0}, {"max_terms": 2}, {"pole_eps": -1}, {"consecutive_small": 0}):
        with pytest.raises(ValueError):
            EvalParams(**kw)


def test_q_pow_is_exponential():
    assert abs(q_pow(1j, Fraction(1, 2)) - math.exp(-math.pi)) < 1e-16


@given(st.floats(-30, 30), st.floats(-3, 3))
def test_log1m_exp_matches_direct_formula(re, im):
    w = complex(re, im)
    if abs(1 - np.exp(w)) < 1e-6:
        return
    got = np.exp(log1m_exp(np.array([w]))[0])
    want = 1 - np.exp(w)
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_window_sum_geometric_gaussian():
    # Σ e^{-j²} is a theta constant; check against a plain loop
    got = window_sum(lambda js: -(js.astype(float) ** 2) + 0j, 0.0, 2.0, DEFAULT_PARAMS)
    want = math.fsum(math.exp(-j * j) for j in range(-40, 41))
    assert abs(got - want) < 1e-15


def test_window_sum_grows_until_tails_are_small():
    # a wide Gaussian centred away from zero forces window doubling
    got = window_sum(lambda js: -((js - 37.0) ** 2) / 50 + 0j, 37.0, 1.0, DEFAULT_PARAMS)
    assert abs(got - math.sqrt(50 * math.pi)) < 1e-10


def test_window_sum_truncation_and_overflow():
    p = EvalParams(max_terms=16)
    with pytest.raises(TruncationExceeded):
        window_sum(lambda js: -(js.astype(float) ** 2) / 1e4 + 0j, 0.0, 1.0, p)
    with pytest.raises(NonFiniteValue):
        window_sum(lambda js: 800.0 - js.astype(float) ** 2 + 0j, 0.0, 10.0, DEFAULT_PARAMS)
