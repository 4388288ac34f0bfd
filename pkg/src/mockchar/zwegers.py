"""Real-analytic completion of the Appell-Lerch sums.

``R_{j;m}(τ,w)`` is the incomplete-Gaussian series

    Σ_{n ≡ j mod 2m} {sgn(n - 1/2 - j + 2m) - E((n - 2m Im w/Im τ) √(Im τ/m))} e^{-πin²τ/2m + 2πinw}

with ``E(x) = 2∫_0^x e^{-πt²} dt``. The correction ``Φ_add`` combines these
with theta differences, and ``Φ̃ = Φ + Φ_add``.
"""
from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.special import erf, erfcx

from .appell import phi
from .base import (
    DEFAULT_PARAMS,
    TWO_PI_I,
    EvalParams,
    HalfLike,
    check_tau,
    half,
    window_sum,
)
from .qseries import jacobi_theta

SQRT_PI = math.sqrt(math.pi)


def gauss_E(x: float) -> float:
    """``E(x) = 2∫_0^x exp(-πt²) dt = erf(√π x)``."""
    return math.erf(SQRT_PI * x)


def r_function(j: HalfLike, m: HalfLike, tau, w, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``R_{j;m}(τ, w)``.

    The bracket is split by sign: where ``sgn`` and ``x`` agree it equals
    ``±erfc(√π|x|)`` and is carried as ``log erfcx - πx²`` so that the
    Gaussian cancels the growth of ``e^{-πin²τ/2m}`` before exponentiating.
    """
    j, m = half(j), half(m)
    if m.twice <= 0:
        raise ValueError("m must be positive")
    tau = check_tau(tau)
    w = complex(w)
    y = tau.imag
    mf, jf = float(m), float(j)
    period = m.twice  # 2m
    v = w.imag / y
    root = math.sqrt(y / mf)

    def logs(ks):
        # sgn(n - 1/2 - j + 2m) with n = j + 2mk: twice the argument is 2m(2k+2) - 1
        arg2 = period * (2 * ks + 2) - 1
        assert np.all(arg2 != 0)
        sgn = np.where(arg2 > 0, 1.0, -1.0)
        n = jf + period * ks
        x = (n - period * v) * root
        agree = sgn * x > 0
        ax = SQRT_PI * np.abs(x)
        bracket = np.empty(ks.shape, dtype=complex)
        bracket[agree] = np.log(erfcx(ax[agree])) - ax[agree] ** 2
        bracket[agree & (sgn < 0)] += 1j * math.pi
        rest = ~agree
        bracket[rest] = np.log((sgn[rest] - erf(SQRT_PI * x[rest])).astype(complex))
        return bracket + TWO_PI_I * (-n * n * tau / (4 * mf) + n * w)

    lo = min(jf - period, period * v)
    hi = max(jf, period * v)
    center = ((lo + hi) / 2 - jf) / period
    spread = (hi - lo) / (2 * period)
    width = math.sqrt(-math.log(p.term_tol) * 2 * mf / (math.pi * y)) / period
    return window_sum(logs, center, width + spread, p, "R-series")


def phi_add(
    m: HalfLike, s: HalfLike, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS
) -> complex:
    """Correction term

    ``-½ e^{-2πimt} Σ_{k ∈ s+ℤ, s ≤ k < s+2m} R_{k;m}(τ, (z1-z2)/2) [θ_{k,m} - θ_{-k,m}](τ, z1+z2)``.
    """
    m, s = half(m), half(s)
    if m.twice <= 0:
        raise ValueError("m must be positive")
    tau = check_tau(tau)
    z1, z2 = complex(z1), complex(z2)
    w, zs = (z1 - z2) / 2, z1 + z2
    total = 0j
    for i in range(m.twice):
        k = s + i
        diff = jacobi_theta(k, m, tau, zs, p) - jacobi_theta(-k, m, tau, zs, p)
        if diff != 0:
            total += r_function(k, m, tau, w, p) * diff
    return -0.5 * cmath.exp(-TWO_PI_I * float(m) * t) * total


def phi_tilde(
    m: HalfLike, s: HalfLike, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS
) -> complex:
    """Modified Appell-Lerch sum ``Φ̃ = Φ + Φ_add``."""
    return phi(m, s, tau, z1, z2, t, p) + phi_add(m, s, tau, z1, z2, t, p)


def phi_tilde_elliptic_check(
    m: HalfLike, s: HalfLike, tau, z, a, b, p: EvalParams = DEFAULT_PARAMS
) -> tuple[complex, complex]:
    """Both sides of the half-period shift law of ``Φ̃`` at ``t = 0``.

    lhs ``Φ̃(τ, z+a+τ/2, z+b-τ/2, 0)``, rhs ``e^{2πim(a-b)} Φ̃(τ, z+a-τ/2, z+b+τ/2, 0)``.
    """
    tau = check_tau(tau)
    z, a, b = complex(z), complex(a), complex(b)
    lhs = phi_tilde(m, s, tau, z + a + tau / 2, z + b - tau / 2, 0, p)
    rhs = cmath.exp(TWO_PI_I * float(half(m)) * (a - b)) * phi_tilde(
        m, s, tau, z + a - tau / 2, z + b + tau / 2, 0, p
    )
    return lhs, rhs
