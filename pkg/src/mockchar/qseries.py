"""Nome, Dedekind eta, Jacobi and Mumford theta functions.

Mumford thetas are available as Jacobi thetas of level 1/2 (``z`` doubled):

===========  =====================================
``ϑ00(τ,z)``  ``θ_{0,1/2}(τ, 2z)``
``ϑ01(τ,z)``  ``θ_{0,1/2}(τ, 2z+1)``
``ϑ10(τ,z)``  ``θ_{1/2,1/2}(τ, 2z)``
``ϑ11(τ,z)``  ``θ_{1/2,1/2}(τ, 2z+1)``
===========  =====================================

``η`` is the usual ``q**(1/24) * prod(1 - q**n)``.
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
    TruncationExceeded,
    check_tau,
    ensure_finite,
    gaussian_width,
    half,
    window_sum,
)

# below this Im(tau) the reducing evaluators apply tau -> -1/tau first
REDUCE_BELOW = 0.5


def nome(tau) -> complex:
    """``q = exp(2*pi*i*tau)``."""
    return cmath.exp(TWO_PI_I * check_tau(tau))


def _wants_reduction(tau: complex) -> bool:
    return tau.imag < REDUCE_BELOW and abs(tau) < 1


def dedekind_eta(tau, p: EvalParams = DEFAULT_PARAMS, reduce: bool = False) -> complex:
    """Dedekind eta ``q**(1/24) * prod_{n>=1} (1 - q**n)``.

    Parameters
    ----------
    tau : complex
        Point of the upper half-plane.
    p : EvalParams
        The product stops once ``|q|**n < term_tol``.
    reduce : bool
        If true and ``Im tau`` is small, evaluate through
        ``eta(tau) = (-i tau)**(-1/2) eta(-1/tau)``.

    Returns
    -------
    complex
    """
    tau = check_tau(tau)
    if reduce and _wants_reduction(tau):
        return dedekind_eta(-1 / tau, p) / cmath.sqrt(-1j * tau)
    log_abs_q = -2 * math.pi * tau.imag
    n_max = int(math.ceil(math.log(p.term_tol) / log_abs_q))
    if n_max > p.max_terms:
        raise TruncationExceeded(f"eta: needs {n_max} factors, max_terms={p.max_terms}")
    n = np.arange(1, max(n_max, 1) + 1)
    logs = np.log1p(-np.exp(TWO_PI_I * tau * n))
    total = TWO_PI_I * tau / 24 + complex(math.fsum(logs.real), math.fsum(logs.imag))
    return ensure_finite(cmath.exp(total), "eta")


def _theta_sum(
    tau: complex,
    z: complex,
    quad: float,
    lin: float,
    shift: float,
    phase: float,
    p: EvalParams,
    offset: complex = 0j,
) -> complex:
    """``sum_j exp(2 pi i (quad r^2 tau + lin r z + phase j) + offset)``, ``r = j + shift``."""

    def logs(js):
        r = js + shift
        return TWO_PI_I * (quad * r * r * tau + lin * r * z + phase * js) + offset

    y = tau.imag
    a = 2 * math.pi * quad * y
    center = -lin * z.imag / (2 * quad * y) - shift
    return window_sum(logs, center, gaussian_width(a, p), p, "theta")


def jacobi_theta(k: HalfLike, m: HalfLike, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``θ_{k,m}(τ,z) = Σ_j exp(2πi m (j+k/2m) z) q^{m (j+k/2m)^2}``."""
    k, m = half(k), half(m)
    if m.twice <= 0:
        raise ValueError("m must be positive")
    tau = check_tau(tau)
    # k/(2m) = (k.twice/2) / m.twice
    shift = k.twice / (2 * m.twice)
    mf = float(m)
    return _theta_sum(tau, complex(z), mf, mf, shift, 0.0, p)


_MUMFORD = {
    # (shift, phase, prefactor)
    (0, 0): (0.0, 0.0, 1),
    (0, 1): (0.0, 0.5, 1),
    (1, 0): (0.5, 0.0, 1),
    (1, 1): (0.5, 0.5, 1j),
}


def mumford_theta(
    a: int, b: int, tau, z, p: EvalParams = DEFAULT_PARAMS, reduce: bool = False
) -> complex:
    """Mumford's ``ϑ_ab(τ, z)`` for ``a, b ∈ {0, 1}``.

    ``ϑ11`` carries the factor ``i`` so that
    ``ϑ11 = i Σ (-1)^n e^{2πi(n+1/2)z} q^{(n+1/2)^2/2}``.
    With ``reduce=True`` small ``Im tau`` is handled through the
    S-transformation, which keeps the series free of cancellation.
    """
    if (a, b) not in _MUMFORD:
        raise ValueError("a and b must be 0 or 1")
    tau = check_tau(tau)
    z = complex(z)
    if reduce and _wants_reduction(tau):
        # ϑ_ab(τ,z) = (-i)^{ab} (-iτ)^{-1/2} e^{-πiz²/τ} ϑ_ba(-1/τ, -z/τ)
        tau2, z2 = -1 / tau, -z / tau
        shift, phase, pre = _MUMFORD[(b, a)]
        pre *= (-1j) ** (a * b) / cmath.sqrt(-1j * tau)
        offset = -1j * math.pi * z * z / tau
        return pre * _theta_sum(tau2, z2, 0.5, 1.0, shift, phase, p, offset)
    shift, phase, pre = _MUMFORD[(a, b)]
    return pre * _theta_sum(tau, z, 0.5, 1.0, shift, phase, p)


def theta(ab: str, tau, z, p: EvalParams = DEFAULT_PARAMS, reduce: bool = False) -> complex:
    """Shorthand: ``theta("11", tau, z)``."""
    return mumford_theta(int(ab[0]), int(ab[1]), tau, z, p, reduce)


def theta_product_identity(
    which: str, tau, z, p: EvalParams = DEFAULT_PARAMS
) -> tuple[complex, complex]:
    """Both sides of a theta product identity.

    ``g1``: ``ϑ11(2τ,2z) = η(2τ)/η(τ)^2 · ϑ11(τ,z) ϑ10(τ,z)``
    ``g2``: ``ϑ10(2τ,z+τ/2) ϑ10(2τ,z-τ/2) = q^{-1/8} η(2τ)^2/η(τ) · ϑ00(τ,z)``
    ``g3``: ``ϑ11(2τ,z+τ/2) ϑ11(2τ,z-τ/2) = q^{-1/8} η(2τ)^2/η(τ) · ϑ01(τ,z)``
    """
    tau = check_tau(tau)
    z = complex(z)
    e1, e2 = dedekind_eta(tau, p), dedekind_eta(2 * tau, p)
    if which == "g1":
        lhs = theta("11", 2 * tau, 2 * z, p)
        rhs = e2 / e1**2 * theta("11", tau, z, p) * theta("10", tau, z, p)
    elif which in ("g2", "g3"):
        ab, other = ("10", "00") if which == "g2" else ("11", "01")
        lhs = theta(ab, 2 * tau, z + tau / 2, p) * theta(ab, 2 * tau, z - tau / 2, p)
        rhs = cmath.exp(-TWO_PI_I * tau / 8) * e2**2 / e1 * theta(other, tau, z, p)
    else:
        raise ValueError(f"unknown product identity {which!r}; expected g1, g2 or g3")
    return lhs, rhs
