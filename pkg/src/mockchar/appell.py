"""Appell-Lerch sums ``Φ1``, ``Φ2`` and ``Φ = Φ1 - Φ2`` of level ``m`` and shift ``s``.

    Φ1(τ,z1,z2,t) = e^{-2πimt} Σ_j e^{2πimj(z1+z2) + 2πisz1} q^{mj²+sj} / (1 - e^{2πiz1} q^j)
    Φ2(τ,z1,z2,t) = e^{-2πimt} Σ_j e^{-2πimj(z1+z2) - 2πisz2} q^{mj²+sj} / (1 - e^{-2πiz2} q^j)
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .base import (
    DEFAULT_PARAMS,
    TWO_PI_I,
    EvalParams,
    HalfLike,
    PoleError,
    check_tau,
    gaussian_width,
    half,
    log1m_exp,
    window_sum,
)
from .qseries import dedekind_eta, jacobi_theta, theta


def _lerch_kernel(m: float, s: float, tau: complex, u: complex, v: complex, p: EvalParams) -> complex:
    """``Σ_j e^{2πi(mjv + su)} q^{mj²+sj} / (1 - e^{2πiu} q^j)``."""
    log_pole_eps = math.log(p.pole_eps)

    def logs(js):
        num = TWO_PI_I * (m * js * v + s * u + tau * (m * js * js + s * js))
        den = log1m_exp(TWO_PI_I * (u + js * tau))
        close = den.real < log_pole_eps
        if np.any(close):
            j = int(js[np.argmax(close)])
            raise PoleError(f"Appell denominator vanishes at j={j}", j=j)
        return num - den

    y = tau.imag
    center = -(m * v.imag + s * y) / (2 * m * y)
    return window_sum(logs, center, gaussian_width(2 * math.pi * m * y, p), p, "appell")


def _check(m: HalfLike, s: HalfLike, tau):
    m, s = half(m), half(s)
    if m.twice <= 0:
        raise ValueError("m must be positive")
    return float(m), float(s), check_tau(tau)


def phi1(m: HalfLike, s: HalfLike, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS) -> complex:
    mf, sf, tau = _check(m, s, tau)
    z1, z2 = complex(z1), complex(z2)
    return cmath.exp(-TWO_PI_I * mf * t) * _lerch_kernel(mf, sf, tau, z1, z1 + z2, p)


def phi2(m: HalfLike, s: HalfLike, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS) -> complex:
    mf, sf, tau = _check(m, s, tau)
    z1, z2 = complex(z1), complex(z2)
    return cmath.exp(-TWO_PI_I * mf * t) * _lerch_kernel(mf, sf, tau, -z2, -(z1 + z2), p)


def phi(m: HalfLike, s: HalfLike, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """Appell-Lerch sum ``Φ^{[m,s]}(τ, z1, z2, t) = Φ1 - Φ2``.

    Raises
    ------
    PoleError
        If ``e^{2πiz1} q^j`` or ``e^{-2πiz2} q^j`` is within ``pole_eps`` of 1
        for some ``j`` in the truncation window.
    TruncationExceeded
        If the window outgrows ``p.max_terms``.
    """
    return phi1(m, s, tau, z1, z2, t, p) - phi2(m, s, tau, z1, z2, t, p)


def phi_s_shift_difference(
    m: HalfLike, s: HalfLike, tau, z1, z2, t=0, a: int = 1, p: EvalParams = DEFAULT_PARAMS
) -> complex:
    """Closed theta form of ``Φ^{[m,s]} - Φ^{[m,s+a]}`` for a positive integer ``a``."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    m, s = half(m), half(s)
    mf, _, tau = _check(m, s, tau)
    z1, z2 = complex(z1), complex(z2)
    total = 0j
    for k in range(a):
        sk = s + k
        skf = float(sk)
        theta_diff = jacobi_theta(sk, m, tau, z1 + z2, p) - jacobi_theta(-sk, m, tau, z1 + z2, p)
        phase = cmath.exp(1j * math.pi * skf * (z1 - z2) - TWO_PI_I * tau * skf * skf / (4 * mf))
        total += phase * theta_diff
    return cmath.exp(-TWO_PI_I * mf * t) * total


def phi_double_tau(
    m: HalfLike, s: HalfLike, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS, fn=phi
) -> complex:
    """Right side of the argument-doubling law for ``fn^{[m,s]}(2τ, z1, z2, t)``.

    ``½{fn^{[2m,2s]}(τ, z1/2, z2/2, t/2) + e^{-2πis} fn^{[2m,2s]}(τ, (z1+1)/2, (z2-1)/2, t/2)}``;
    ``fn`` is ``phi`` or ``phi_tilde``.
    """
    m, s = half(m), half(s)
    tau = check_tau(tau)
    z1, z2, t = complex(z1), complex(z2), complex(t)
    m2, s2 = m * 2, s * 2
    first = fn(m2, s2, tau, z1 / 2, z2 / 2, t / 2, p)
    second = fn(m2, s2, tau, (z1 + 1) / 2, (z2 - 1) / 2, t / 2, p)
    return 0.5 * (first + cmath.exp(-TWO_PI_I * float(s)) * second)


def denominator_product(tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``-i e^{-2πit} η³ ϑ11(z1+z2) / (ϑ11(z1) ϑ11(z2))``, the level-one value of
    ``Φ^{[1,s]}`` for integer ``s``."""
    tau = check_tau(tau)
    z1, z2 = complex(z1), complex(z2)
    den = theta("11", tau, z1, p) * theta("11", tau, z2, p)
    if abs(den) < p.pole_eps:
        raise PoleError("ϑ11(z1)ϑ11(z2) vanishes")
    num = dedekind_eta(tau, p) ** 3 * theta("11", tau, z1 + z2, p)
    return -1j * cmath.exp(-TWO_PI_I * t) * num / den
