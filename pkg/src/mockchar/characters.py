"""N=3 characters built from Appell-Lerch sums.

Every character is a numerator (``Φ`` for honest, ``Φ̃`` for modified, at
``2τ``) divided by one of three η/ϑ denominators. The one-variable
numerators come from the two-variable ``B̂(1,1)`` numerator through the
substitution ``(z1, z2, t) = (z+τ/2, -z+τ/2, τ/4)``:

=============  ===========================================  ===========
sector         numerator ``F^{[m/2,(m2+1)/2]}(2τ, ...)``      denominator
=============  ===========================================  ===========
plus           ``z+τ/2-½, z-τ/2+½, τ/8``                     ``R+``
minus          ``z+τ/2, z-τ/2, τ/8``                         ``R-``
twist_plus     ``z+τ-½, z-τ+½, τ/2``                         ``Rtw``
twist_minus    ``z-½, z+½, 0``                               ``Rtw``
=============  ===========================================  ===========
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .appell import phi, phi1
from .base import (
    DEFAULT_PARAMS,
    EvalParams,
    HalfInt,
    HalfLike,
    PoleError,
    check_tau,
    half,
    q_pow,
)
from .qseries import dedekind_eta, theta
from .zwegers import phi_tilde

SQRT2 = math.sqrt(2.0)


class Sector(enum.Enum):
    plus = "plus"
    minus = "minus"
    twist_plus = "twist_plus"
    twist_minus = "twist_minus"

    @classmethod
    def parse(cls, text: str) -> "Sector":
        key = text.strip().lower()
        aliases = {"+": "plus", "-": "minus", "tw+": "twist_plus", "tw-": "twist_minus"}
        key = aliases.get(key, key.replace("-", "_"))
        try:
            return cls(key)
        except ValueError:
            valid = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown sector {text!r}; expected one of {valid}") from None


@dataclass(frozen=True)
class WeightParams:
    """Level ``m ≥ 1`` and label ``0 ≤ m2 ≤ m`` of ``Λ^{[K(m), m2]}``."""

    m: int
    m2: int

    def __post_init__(self):
        for name in ("m", "m2"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int, got {v!r}")
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if not 0 <= self.m2 <= self.m:
            raise ValueError(f"need 0 <= m2 <= m, got m={self.m}, m2={self.m2}")

    @property
    def level(self) -> Fraction:
        """``K(m) = -(m+2)/4``."""
        return Fraction(-(self.m + 2), 4)

    @property
    def appell_index(self) -> tuple[HalfInt, HalfInt]:
        """``(m/2, (m2+1)/2)``."""
        return HalfInt(self.m), HalfInt(self.m2 + 1)


def twist_vanishes(w: WeightParams, sector: Sector) -> bool:
    """True where the modified twisted numerator is identically zero."""
    if sector is Sector.twist_plus:
        return (w.m + w.m2) % 2 == 0
    if sector is Sector.twist_minus:
        return w.m2 % 2 == 0
    return False


@dataclass(frozen=True)
class CharacterId:
    weight: WeightParams
    sector: Sector
    modified: bool = False
    allow_zero: bool = False

    def __post_init__(self):
        if self.modified and twist_vanishes(self.weight, self.sector) and not self.allow_zero:
            raise ValueError(
                f"modified {self.sector.value} character with m={self.weight.m}, "
                f"m2={self.weight.m2} is identically zero; pass allow_zero=True to request it"
            )

    @classmethod
    def parse(cls, text: str, allow_zero: bool = False) -> "CharacterId":
        """Parse ``"m=2,m2=1,plus,honest"`` (order of fields is free)."""
        fields = {}
        sector, modified = None, None
        for part in (p.strip() for p in text.split(",") if p.strip()):
            if "=" in part:
                k, v = (x.strip() for x in part.split("=", 1))
                if k not in ("m", "m2"):
                    raise ValueError(f"unknown field {k!r} in {text!r}")
                fields[k] = int(v)
            elif part in ("honest", "modified"):
                modified = part == "modified"
            else:
                sector = Sector.parse(part)
        if "m" not in fields or "m2" not in fields or sector is None:
            raise ValueError(f"character label {text!r} needs m=, m2= and a sector")
        return cls(WeightParams(fields["m"], fields["m2"]), sector, bool(modified), allow_zero)

    def __str__(self) -> str:
        kind = "modified" if self.modified else "honest"
        return f"m={self.weight.m},m2={self.weight.m2},{self.sector.value},{kind}"


def central_charge(m: int) -> Fraction:
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    return Fraction(3 * m - 1, 2)


def _appell(modified: bool):
    return phi_tilde if modified else phi


# --- numerators -------------------------------------------------------------


def numerator_super(
    w: WeightParams, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS, modified: bool = False
) -> complex:
    """Two-variable supercharacter numerator ``F(2τ, z1, -z2, t/2)``."""
    tau = check_tau(tau)
    m, s = w.appell_index
    return _appell(modified)(m, s, 2 * tau, complex(z1), -complex(z2), complex(t) / 2, p)


def numerator_plus(
    w: WeightParams, tau, z1, z2, t=0, p: EvalParams = DEFAULT_PARAMS, modified: bool = False
) -> complex:
    return numerator_super(w, tau, complex(z1) - 0.5, complex(z2) - 0.5, t, p, modified)


def numerator_twisted(
    w: WeightParams,
    j: HalfLike,
    k: HalfLike,
    tau,
    z1,
    z2,
    t=0,
    p: EvalParams = DEFAULT_PARAMS,
    modified: bool = False,
) -> complex:
    """Numerator twisted by ``σ_{j,k}``:

    ``F(2τ, z1+kτ-½, -z2-jτ+½, ½(t + j z1 + k z2 + jkτ))``.
    """
    tau = check_tau(tau)
    jf, kf = float(half(j)), float(half(k))
    z1, z2, t = complex(z1), complex(z2), complex(t)
    m, s = w.appell_index
    return _appell(modified)(
        m, s, 2 * tau,
        z1 + kf * tau - 0.5,
        -z2 - jf * tau + 0.5,
        0.5 * (t + jf * z1 + kf * z2 + jf * kf * tau),
        p,
    )


def sector_arguments(sector: Sector, tau: complex, z: complex) -> tuple[complex, complex, complex]:
    """``(z1, z2, t)`` of the one-variable numerator, evaluated at ``2τ``."""
    if sector is Sector.plus:
        return z + tau / 2 - 0.5, z - tau / 2 + 0.5, tau / 8
    if sector is Sector.minus:
        return z + tau / 2, z - tau / 2, tau / 8
    if sector is Sector.twist_plus:
        return z + tau - 0.5, z - tau + 0.5, tau / 2
    return z - 0.5, z + 0.5, 0j


def sector_numerator(
    w: WeightParams, sector: Sector, tau, z, p: EvalParams = DEFAULT_PARAMS, modified: bool = False
) -> complex:
    tau, z = check_tau(tau), complex(z)
    m, s = w.appell_index
    z1, z2, t = sector_arguments(sector, tau, z)
    return _appell(modified)(m, s, 2 * tau, z1, z2, t, p)


# --- denominators -----------------------------------------------------------


def _nonzero(value: complex, what: str, p: EvalParams) -> complex:
    if abs(value) < p.pole_eps:
        raise PoleError(f"{what} vanishes")
    return value


def n3_denominator(kind: str | Sector, tau, z, p: EvalParams = DEFAULT_PARAMS, reduce: bool = False) -> complex:
    """``R+ = η(τ/2)η(2τ) ϑ11/ϑ00``, ``R- = η(τ)³/η(τ/2) ϑ11/ϑ01``,
    ``Rtw = η(τ)³/(√2 η(2τ)) ϑ11/ϑ10``.

    ``kind`` is ``plus``, ``minus`` or ``twisted``; twisted sectors are
    accepted too.
    """
    if isinstance(kind, Sector):
        kind = {"twist_plus": "twisted", "twist_minus": "twisted"}.get(kind.value, kind.value)
    tau, z = check_tau(tau), complex(z)
    th = lambda ab: theta(ab, tau, z, p, reduce)  # noqa: E731
    eta = lambda x: dedekind_eta(x, p, reduce)  # noqa: E731
    if kind == "plus":
        return eta(tau / 2) * eta(2 * tau) * th("11") / _nonzero(th("00"), "ϑ00", p)
    if kind == "minus":
        return eta(tau) ** 3 / eta(tau / 2) * th("11") / _nonzero(th("01"), "ϑ01", p)
    if kind == "twisted":
        return eta(tau) ** 3 / (SQRT2 * eta(2 * tau)) * th("11") / _nonzero(th("10"), "ϑ10", p)
    raise ValueError(f"unknown denominator kind {kind!r}; expected plus, minus or twisted")


def character(cid: CharacterId, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """Series-built (super/twisted) character: numerator over denominator."""
    tau, z = check_tau(tau), complex(z)
    if cid.modified and twist_vanishes(cid.weight, cid.sector):
        return 0j
    den = n3_denominator(cid.sector, tau, z, p)
    if abs(den) < p.pole_eps:
        raise PoleError("N=3 denominator vanishes")
    return sector_numerator(cid.weight, cid.sector, tau, z, p, cid.modified) / den


# --- Ã, Å and g ---------------------------------------------------------------

_A_SHIFTS = {
    # (τ-coefficient, constant) of z1 - z/2; z2 - z/2 is the negative
    1: (0.25, 0.25),
    2: (0.25, -0.25),
    3: (0.25, 0.5),
    4: (0.25, 0.0),
    5: (0.0, 0.25),
    6: (0.5, -0.25),
}


def _check_index(i: int, top: int = 6):
    if i not in range(1, top + 1):
        raise ValueError(f"index must be in 1..{top}, got {i!r}")


def a_tilde(i: int, m: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``Ã^{[m]}_i(τ, z) = Φ̃^{[m,0]}(τ, z/2 + c_i, z/2 - c_i, 0)``."""
    _check_index(i)
    tau, z = check_tau(tau), complex(z)
    a, b = _A_SHIFTS[i]
    c = a * tau + b
    return phi_tilde(m, 0, tau, z / 2 + c, z / 2 - c, 0, p)


def a_tilde6_alt(m: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """Second expression ``e^{-πim} Φ̃^{[m,0]}(τ, z/2+τ/2+¼, z/2-τ/2-¼, 0)`` for ``Ã6``."""
    tau, z = check_tau(tau), complex(z)
    c = tau / 2 + 0.25
    return cmath.exp(-1j * math.pi * m) * phi_tilde(m, 0, tau, z / 2 + c, z / 2 - c, 0, p)


def a_ring(i: int, m: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``Å_i = e^{-πimτ/8} Ã_i`` (i ≤ 4), ``Å5 = Ã5``, ``Å6 = e^{-πimτ/2} Ã6``."""
    _check_index(i)
    tau = check_tau(tau)
    rate = {5: 0.0, 6: 0.5}.get(i, 0.125)
    return cmath.exp(-1j * math.pi * m * rate * tau) * a_tilde(i, m, tau, z, p)


_G_TABLE = {
    # i: (eta powers at (τ/2, τ, 2τ), numerator theta, denominators for +/-)
    1: ((0, -1, 2), "10", {"+": "01", "-": "00"}),
    2: ((2, -1, 0), "01", {"+": "10", "-": "00"}),
    3: ((-2, 5, -2), "00", {"+": "10", "-": "01"}),
}


def g_function(i: int, sign: str, tau, z, p: EvalParams = DEFAULT_PARAMS, reduce: bool = False) -> complex:
    """``g_i^{(±)} = (η-quotient) · ϑ11 ϑ_x / ϑ_y`` for ``i = 1, 2, 3``."""
    _check_index(i, 3)
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    tau, z = check_tau(tau), complex(z)
    powers, top, bottom = _G_TABLE[i]
    pref = 1 + 0j
    for x, k in zip((tau / 2, tau, 2 * tau), powers):
        if k:
            pref *= dedekind_eta(x, p, reduce) ** k
    den = _nonzero(theta(bottom[sign], tau, z, p, reduce), f"ϑ{bottom[sign]}", p)
    return pref * theta("11", tau, z, p, reduce) * theta(top, tau, z, p, reduce) / den


# --- P, Q and the level-doubling relations -----------------------------------


def p_function(m: int, s: HalfLike, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``P^{[m,s]}(τ,z) = Φ^{[m/2,s]}(2τ, z+τ/2, z-τ/2, 0)``."""
    tau, z = check_tau(tau), complex(z)
    return phi(HalfInt(m), s, 2 * tau, z + tau / 2, z - tau / 2, 0, p)


def q_function(m: int, s: HalfLike, tau, z, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """``Q^{[m,s]}(τ,z) = Φ^{[m/2,s]}(2τ, z+τ/2-½, z-τ/2+½, 0)``."""
    tau, z = check_tau(tau), complex(z)
    return phi(HalfInt(m), s, 2 * tau, z + tau / 2 - 0.5, z - tau / 2 + 0.5, 0, p)


def doubling_relation(
    rel: int, m: int, tau, z, p: EvalParams = DEFAULT_PARAMS, printed: bool = False
) -> tuple[complex, complex]:
    """Both sides of one of the six relations between ``Å^{[m]}`` and ``Å^{[2m]}``.

    1. ``2Å3^{[m]}(2τ,2z) = Å1 + Å2``
    2. ``Å6^{[m]}(τ/2,z) = e^{πim}Å1 + Å2``
    3. ``2Å4^{[m]}(2τ,2z) = Å3 + Å4``
    4. ``e^{πim/4}Å6^{[m]}((τ+1)/2,z) = e^{πim}Å3 + Å4``
    5. ``Å5^{[m]}(τ/2,z) = Å5 + e^{πim}Å6``
    6. ``Å6^{[m]}(-1/2τ+½, z/τ) = τ e^{-πim/4} e^{πimz²/τ}(Å5 + Å6)``

    with ``Å^{[2m]}`` at ``(τ, z)`` on the right. ``printed=True`` gives the
    variants ``Å1 + e^{-πim}Å2``, ``Å3 + e^{-πim}Å4`` and the phase
    ``e^{πim/2}`` in 6; those agree with the above only for even ``m``
    (and never for 6).
    """
    _check_index(rel)
    tau, z = check_tau(tau), complex(z)
    big = lambda i: a_ring(i, 2 * m, tau, z, p)  # noqa: E731
    sign = cmath.exp(1j * math.pi * m)
    if rel == 1:
        return 2 * a_ring(3, m, 2 * tau, 2 * z, p), big(1) + big(2)
    if rel == 2:
        rhs = big(1) + sign.conjugate() * big(2) if printed else sign * big(1) + big(2)
        return a_ring(6, m, tau / 2, z, p), rhs
    if rel == 3:
        return 2 * a_ring(4, m, 2 * tau, 2 * z, p), big(3) + big(4)
    if rel == 4:
        lhs = cmath.exp(1j * math.pi * m / 4) * a_ring(6, m, (tau + 1) / 2, z, p)
        rhs = big(3) + sign.conjugate() * big(4) if printed else sign * big(3) + big(4)
        return lhs, rhs
    if rel == 5:
        return a_ring(5, m, tau / 2, z, p), big(5) + sign * big(6)
    lhs = a_ring(6, m, -1 / (2 * tau) + 0.5, z / tau, p)
    phase = m / 2 if printed else -m / 4
    pref = tau * cmath.exp(1j * math.pi * (phase + m * z * z / tau))
    return lhs, pref * (big(5) + big(6))


# --- vanishing of the supercharacter numerator -------------------------------


def numerator_vanishing_check(w: WeightParams, n: int, pp: int, tau, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """Honest minus-sector numerator at ``z = n + pp·τ`` (expected to vanish)."""
    tau = check_tau(tau)
    return sector_numerator(w, Sector.minus, tau, n + pp * tau, p)


def vanishing_scale(w: WeightParams, n: int, pp: int, tau, p: EvalParams = DEFAULT_PARAMS) -> float:
    """Size of the cancelling parts at ``z = n + pp·τ``.

    The numerator is ``Φ1 - Φ2`` and both parts are individually of this
    size, so the vanishing is measured against ``|Φ1|``.
    """
    tau = check_tau(tau)
    z = n + pp * tau
    m, s = w.appell_index
    z1, z2, t = sector_arguments(Sector.minus, tau, z)
    return abs(phi1(m, s, 2 * tau, z1, z2, t, p))


def local_prefactor(m: int, tau) -> complex:
    """``q^{-m/16}``: the ``t = τ/8`` factor of the plus and minus numerators."""
    return q_pow(check_tau(tau), Fraction(-m, 16))


__all__ = [
    "Sector", "WeightParams", "CharacterId", "central_charge", "twist_vanishes",
    "numerator_super", "numerator_plus", "numerator_twisted", "sector_arguments",
    "sector_numerator", "n3_denominator", "character", "a_tilde", "a_tilde6_alt",
    "a_ring", "g_function", "p_function", "q_function", "doubling_relation",
    "numerator_vanishing_check", "vanishing_scale", "local_prefactor",
]
