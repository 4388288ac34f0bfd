"""Leading ``τ ↓ 0`` behaviour of the ``m = 2`` characters along ``τ = iT``,
``z = aτ``.

A prediction has the shape ``c · [cos(aπ)] · (-iτ)^power · e^{rate·πi/τ}``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .base import DEFAULT_PARAMS, EvalParams, UnknownAsymptotic, check_tau
from .characters import CharacterId, Sector
from .closed_forms import closed_form_character
from .qseries import dedekind_eta, theta

DEFAULT_LADDER = (0.2, 0.1, 0.05)


@dataclass(frozen=True)
class AsymptoticPrediction:
    coefficient: complex
    exponent_rate: Fraction
    power: Fraction
    cos_factor: bool = False

    def value(self, tau, a: float = 0.0) -> complex:
        tau = check_tau(tau)
        out = self.coefficient * (-1j * tau) ** float(self.power)
        if self.cos_factor:
            out *= math.cos(a * math.pi)
        return out * cmath.exp(float(self.exponent_rate) * 1j * math.pi / tau)


_HALF = Fraction(1, 2)
_ROWS = {
    # (m2, sector, modified) -> (coefficient, rate, power, cos)
    (0, Sector.plus, True): (-2, Fraction(-7, 24), Fraction(0), True),
    (0, Sector.plus, False): (-0.5, Fraction(5, 24), _HALF, False),
    (2, Sector.plus, False): (0.5, Fraction(5, 24), _HALF, False),
    (1, Sector.plus, False): (0.5j, Fraction(5, 24), Fraction(0), False),
    (0, Sector.minus, True): (-1j / math.sqrt(2), Fraction(1, 12), Fraction(0), False),
    (0, Sector.minus, False): (-1j / math.sqrt(2), Fraction(1, 12), Fraction(0), False),
    (1, Sector.minus, False): (-1j / math.sqrt(2), Fraction(1, 12), Fraction(0), False),
    (2, Sector.minus, False): (-1j / math.sqrt(2), Fraction(1, 12), Fraction(0), False),
}


def tabulated_characters() -> list[CharacterId]:
    from .characters import WeightParams

    return [CharacterId(WeightParams(2, m2), sec, mod) for (m2, sec, mod) in _ROWS]


def asymptotic_prediction(cid: CharacterId, a: float = 0.0) -> AsymptoticPrediction:
    """Tabulated leading term for ``cid``; ``a`` only matters through the
    cosine flag of the modified plus row.

    Raises ``UnknownAsymptotic`` for any other character.
    """
    key = (cid.weight.m2, cid.sector, cid.modified)
    if cid.weight.m != 2 or key not in _ROWS:
        raise UnknownAsymptotic(f"no tabulated asymptotic for {cid}")
    c, rate, power, cos = _ROWS[key]
    return AsymptoticPrediction(complex(c), rate, power, cos)


def theta_asymptotic(ab: str, tau, a: float) -> complex:
    """Leading term of ``ϑ_ab(τ, aτ)``: ``(-iτ)^{-½}`` times
    ``1``, ``2cos(aπ)e^{-πi/4τ}``, ``1`` or ``-2i sin(aπ)e^{-πi/4τ}`` for
    ``00``, ``01``, ``10``, ``11``."""
    tau = check_tau(tau)
    base = 1 / cmath.sqrt(-1j * tau)
    tail = cmath.exp(-1j * math.pi / (4 * tau))
    if ab in ("00", "10"):
        return base
    if ab == "01":
        return base * 2 * math.cos(a * math.pi) * tail
    if ab == "11":
        return -base * 2j * math.sin(a * math.pi) * tail
    raise ValueError("ab must be one of 00, 01, 10, 11")


def eta_asymptotic(tau) -> complex:
    """``η(τ) ~ (-iτ)^{-½} e^{-πi/12τ}``."""
    tau = check_tau(tau)
    return cmath.exp(-1j * math.pi / (12 * tau)) / cmath.sqrt(-1j * tau)


@dataclass(frozen=True)
class LadderRung:
    T: float
    actual: complex
    predicted: complex

    @property
    def deviation(self) -> float:
        return abs(self.actual / self.predicted - 1)


def asymptotic_ladder(
    cid: CharacterId, a: float, ladder=DEFAULT_LADDER, p: EvalParams = DEFAULT_PARAMS
) -> list[LadderRung]:
    """``actual / predicted`` along ``τ = iT``. The actual value comes from the
    η/ϑ closed form with S-reduced η and ϑ."""
    pred = asymptotic_prediction(cid, a)
    out = []
    for T in ladder:
        tau = 1j * T
        actual = closed_form_character(cid, tau, a * tau, p, reduce=True)
        out.append(LadderRung(T, actual, pred.value(tau, a)))
    return out


def primitive_ladder(kind: str, a: float, ladder=DEFAULT_LADDER, p: EvalParams = DEFAULT_PARAMS) -> list[LadderRung]:
    """Ladder for ``eta`` or a Mumford theta (``kind`` = ``"eta"`` or ``"00"`` ...)."""
    out = []
    for T in ladder:
        tau = 1j * T
        if kind == "eta":
            out.append(LadderRung(T, dedekind_eta(tau, p, reduce=True), eta_asymptotic(tau)))
        else:
            out.append(LadderRung(T, theta(kind, tau, a * tau, p, reduce=True), theta_asymptotic(kind, tau, a)))
    return out
