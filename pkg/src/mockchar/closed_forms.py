"""η/ϑ closed forms for the characters at ``m = 2`` and ``m = 4``, and for
the low-level Appell-Lerch specializations they are built from.

With ``reduce`` set, the character closed forms evaluate η and ϑ at small
``Im τ`` through the S-transformation (used for ``τ → 0`` asymptotics).
"""
from __future__ import annotations

import math

from .base import DEFAULT_PARAMS, EvalParams, HalfLike, check_tau, half, q_pow
from .characters import CharacterId, Sector, g_function
from .qseries import dedekind_eta, jacobi_theta, theta

SQRT2 = math.sqrt(2.0)


class _Kit:
    """η and ϑ at one ``(τ, z)`` with shared parameters."""

    def __init__(self, tau, z, p: EvalParams, reduce: bool):
        self.tau, self.z, self.p, self.reduce = check_tau(tau), complex(z), p, reduce
        self._eta = {}

    def eta(self, scale: float) -> complex:
        if scale not in self._eta:
            self._eta[scale] = dedekind_eta(scale * self.tau, self.p, self.reduce)
        return self._eta[scale]

    def th(self, ab: str, scale: int = 1) -> complex:
        return theta(ab, scale * self.tau, scale * self.z, self.p, self.reduce)


# --- m = 2 ------------------------------------------------------------------


def _m2_modified(k: _Kit, sector: Sector, odd: bool) -> complex:
    e = k.eta
    if sector is Sector.plus:
        if odd:
            return 1j * e(2) / (e(0.5) * e(1)) * k.th("10")
        return -0.5 * e(0.5) / (e(2) * e(1)) * k.th("01")
    if sector is Sector.minus:
        if odd:
            return -1j * e(0.5) * e(2) ** 2 / e(1) ** 4 * k.th("10")
        return -0.5j * e(1) ** 2 / (e(0.5) * e(2) ** 2) * k.th("00")
    first = e(1) ** 2 / (e(0.5) ** 2 * e(2)) * k.th("00")
    second = e(0.5) ** 2 * e(2) / e(1) ** 4 * k.th("01")
    if sector is Sector.twist_minus:
        return 1j / SQRT2 * (first + second)
    return 1j / SQRT2 * (first - second)


def _m2_honest_even(k: _Kit, sector: Sector, m2: int) -> complex:
    e = k.eta
    sign = 1 if m2 == 0 else -1
    if sector is Sector.plus:
        return -0.5 * (e(0.5) / (e(2) * e(1)) * k.th("01") + sign / (e(0.5) * e(2)) * k.th("00"))
    return -0.5j * (
        e(1) ** 2 / (e(0.5) * e(2) ** 2) * k.th("00") + sign * e(0.5) / e(1) ** 3 * k.th("01")
    )


# --- m = 4 ------------------------------------------------------------------


def _m4_parts(k: _Kit) -> tuple[complex, complex, complex]:
    """``B = η(2τ)⁵/(η(τ)²η(4τ)²) ϑ00(2τ,2z)``, ``C = 2η(4τ)²/η(2τ) ϑ10(2τ,2z)``, ``D = ϑ01(2τ,2z)``."""
    e = k.eta
    b = e(2) ** 5 / (e(1) ** 2 * e(4) ** 2) * k.th("00", 2)
    c = 2 * e(4) ** 2 / e(2) * k.th("10", 2)
    return b, c, k.th("01", 2)


def _m4(k: _Kit, sector: Sector, modified: bool, m2: int) -> complex:
    e = k.eta
    b, c, d = _m4_parts(k)
    extra = 0 if modified else (d if m2 == 1 else -d)
    if sector is Sector.plus:
        return 0.5j / (e(0.5) * e(2)) * k.th("10") / k.th("01") * (b - c + extra)
    return -0.5j * e(0.5) / e(1) ** 3 * k.th("10") / k.th("00") * (b + c + extra)


def has_closed_form(cid: CharacterId) -> bool:
    w, sec = cid.weight, cid.sector
    if w.m == 2:
        if cid.modified or w.m2 == 1:
            return True
        return sec in (Sector.plus, Sector.minus)
    if w.m == 4:
        if sec not in (Sector.plus, Sector.minus):
            return False
        return w.m2 % 2 == 1
    return False


def closed_form_character(
    cid: CharacterId, tau, z, p: EvalParams = DEFAULT_PARAMS, reduce: bool = False
) -> complex:
    """Closed form of a character at ``m = 2`` (all six modified, honest
    ``m2 ∈ {0,1,2}``) or ``m = 4`` (``m2`` odd, plus and minus sectors).

    Raises ``ValueError`` for characters without a closed form.
    """
    if not has_closed_form(cid):
        raise ValueError(f"no closed form registered for {cid}")
    w, sec = cid.weight, cid.sector
    if cid.modified and _twist_zero(w.m, w.m2, sec):
        return 0j
    k = _Kit(tau, z, p, reduce)
    if w.m == 2:
        if cid.modified or w.m2 == 1:
            return _m2_modified(k, sec, w.m2 % 2 == 1)
        return _m2_honest_even(k, sec, w.m2)
    return _m4(k, sec, cid.modified, w.m2)


def _twist_zero(m: int, m2: int, sec: Sector) -> bool:
    if sec is Sector.twist_plus:
        return (m + m2) % 2 == 0
    if sec is Sector.twist_minus:
        return m2 % 2 == 0
    return False


# --- Appell-Lerch specializations --------------------------------------------


def r_closed_form(j: HalfLike, shifted: bool, tau) -> complex:
    """``R_{j;1}(τ, τ/4)`` (``shifted=False``) or ``R_{j;1}(τ, τ/4 - ½)``.

    ``j = ½`` gives ``q^{1/16}`` resp. ``-i q^{1/16}``; ``j = 3/2`` gives 0.
    """
    j = half(j)
    tau = check_tau(tau)
    if j == half("3/2"):
        return 0j
    if j != half("1/2"):
        raise ValueError("closed form known for j = 1/2 and 3/2 only")
    base = q_pow(tau, 1 / 16)
    return -1j * base if shifted else base


def phi_add_closed_form(shifted: bool, tau, z, t_eighth: bool = True, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``Φ_add^{[1,½]}(2τ, z+τ/2, z-τ/2, t)``, or with arguments
    ``(z+τ/2-½, z-τ/2+½)`` when ``shifted``.

    At ``t = τ/8`` the values are ``(i/2)ϑ11(τ,z)`` and ``½ϑ11(τ,z)``; at
    ``t = 0`` (``t_eighth=False``) both pick up ``q^{1/8}``.
    """
    tau = check_tau(tau)
    value = (0.5 if shifted else 0.5j) * theta("11", tau, z, p)
    return value if t_eighth else q_pow(tau, 0.125) * value


def phi_add_half_theta(shifted: bool, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``Φ_add^{[1,½]}(τ, z+τ/4, z-τ/4, 0) = -½ q^{1/16}[θ_{½,1} - θ_{-½,1}](τ, 2z)``;
    with arguments ``(z+τ/4-½, z-τ/4+½)`` the factor ``-½`` becomes ``i/2``."""
    tau = check_tau(tau)
    diff = jacobi_theta("1/2", 1, tau, 2 * complex(z), p) - jacobi_theta("-1/2", 1, tau, 2 * complex(z), p)
    factor = 0.5j if shifted else -0.5
    return factor * q_pow(tau, 1 / 16) * diff


def phi_half_closed_form(s: HalfLike, shifted: bool, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``Φ^{[1,s]}(2τ, z+τ/2, z-τ/2, τ/8)`` for ``s ∈ {½, 3/2}``:
    ``-(i/2){g3⁻ ± ϑ11}``; with ``(z+τ/2-½, z-τ/2+½)`` it is ``-½{g2⁻ ± ϑ11}``.
    The upper sign belongs to ``s = ½``."""
    s = half(s)
    if s not in (half("1/2"), half("3/2")):
        raise ValueError("s must be 1/2 or 3/2")
    sign = 1 if s == half("1/2") else -1
    t11 = theta("11", tau, z, p)
    if shifted:
        return -0.5 * (g_function(2, "-", tau, z, p) + sign * t11)
    return -0.5j * (g_function(3, "-", tau, z, p) + sign * t11)


def p2_closed_form(s: HalfLike, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``P^{[2,s]}`` for ``s ∈ {½, 1, 3/2}``:
    ``-(i/2) q^{1/8}{g3⁻ ± ϑ11}`` and ``P^{[2,1]} = -i q^{1/8} g1⁺``."""
    s = half(s)
    tau = check_tau(tau)
    if s == half(1):
        return -1j * q_pow(tau, 0.125) * g_function(1, "+", tau, z, p)
    if s not in (half("1/2"), half("3/2")):
        raise ValueError("s must be 1/2, 1 or 3/2")
    sign = 1 if s == half("1/2") else -1
    g3 = g_function(3, "-", tau, z, p)
    return -0.5j * q_pow(tau, 0.125) * (g3 + sign * theta("11", tau, z, p))


def pq4_closed_form(which: str, s: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``P^{[4,s]}`` / ``Q^{[4,s]}`` (``which`` = ``"P"`` / ``"Q"``) for ``s ∈ {1, 2}``:

    ``P = -(i/2) q^{1/4}{g3⁻ + 2g1⁺ ± ϑ11}``, ``Q = (i/2) q^{1/4}{g3⁻ - 2g1⁺ ± ϑ11}``,
    all at ``(2τ, 2z)``; the upper sign belongs to ``s = 1``.
    """
    if which not in ("P", "Q") or s not in (1, 2):
        raise ValueError("which must be 'P' or 'Q' and s in {1, 2}")
    tau, z = check_tau(tau), complex(z)
    g3 = g_function(3, "-", 2 * tau, 2 * z, p)
    g1 = g_function(1, "+", 2 * tau, 2 * z, p)
    t11 = theta("11", 2 * tau, 2 * z, p)
    sign = 1 if s == 1 else -1
    if which == "P":
        return -0.5j * q_pow(tau, 0.25) * (g3 + 2 * g1 + sign * t11)
    return 0.5j * q_pow(tau, 0.25) * (g3 - 2 * g1 + sign * t11)


def theta_ratio_relation(kind: str, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """Both sides of the ϑ-ratio identities at ``2τ``:

    ``sum``:  ``ϑ00/ϑ10 + ϑ10/ϑ00`` at ``(2τ,z)`` vs ``η(τ)⁶/(η(τ/2)²η(2τ)⁴) ϑ00/ϑ10`` at ``(τ,z)``
    ``diff``: ``ϑ00/ϑ10 - ϑ10/ϑ00`` at ``(2τ,z)`` vs ``η(τ/2)²/η(2τ)² ϑ01/ϑ10`` at ``(τ,z)``
    """
    tau, z = check_tau(tau), complex(z)
    a, b = theta("00", 2 * tau, z, p), theta("10", 2 * tau, z, p)
    e = lambda x: dedekind_eta(x, p)  # noqa: E731
    if kind == "sum":
        rhs = e(tau) ** 6 / (e(tau / 2) ** 2 * e(2 * tau) ** 4) * theta("00", tau, z, p) / theta("10", tau, z, p)
        return a / b + b / a, rhs
    if kind == "diff":
        rhs = e(tau / 2) ** 2 / e(2 * tau) ** 2 * theta("01", tau, z, p) / theta("10", tau, z, p)
        return a / b - b / a, rhs
    raise ValueError("kind must be 'sum' or 'diff'")


def theta_pair_difference(tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex, complex]:
    """``[θ_{½,1} - θ_{-½,1}](2τ,2z)``, ``[θ_{1,2} - θ_{-1,2}](τ,z)`` and ``-iϑ11(τ,z)``."""
    tau, z = check_tau(tau), complex(z)
    a = jacobi_theta("1/2", 1, 2 * tau, 2 * z, p) - jacobi_theta("-1/2", 1, 2 * tau, 2 * z, p)
    b = jacobi_theta(1, 2, tau, z, p) - jacobi_theta(-1, 2, tau, z, p)
    return a, b, -1j * theta("11", tau, z, p)


__all__ = [
    "has_closed_form", "closed_form_character", "r_closed_form", "phi_add_closed_form",
    "phi_add_half_theta", "phi_half_closed_form", "p2_closed_form", "pq4_closed_form",
    "theta_ratio_relation", "theta_pair_difference",
]
