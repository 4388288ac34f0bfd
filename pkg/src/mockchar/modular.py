"""S and T transformation laws as two-sided evaluations.

Each ``*_relation`` returns ``(lhs, rhs)`` where ``lhs`` is the function at
the transformed point (``(-1/τ, z/τ)`` for ``S``, ``(τ+1, z)`` for ``T``) and
``rhs`` is the predicted combination at ``(τ, z)``.

Modified characters are keyed by ``p0, p1`` (plus, ``m2`` = 0, 1),
``m0, m1`` (minus), ``tp`` (twist_plus at the nonzero parity) and ``tm``
(twist_minus, ``m2 = 1``).
"""
from __future__ import annotations

import cmath
import math

from .base import DEFAULT_PARAMS, EvalParams, check_tau
from .characters import (
    CharacterId,
    Sector,
    WeightParams,
    a_ring,
    a_tilde,
    character,
    g_function,
    n3_denominator,
)

PI_I = 1j * math.pi
CHARACTER_KEYS = ("p0", "p1", "m0", "m1", "tp", "tm")
LAWS = ("S", "T")


def _law(law: str) -> str:
    if law not in LAWS:
        raise ValueError(f"law must be 'S' or 'T', got {law!r}")
    return law


def _moved(law: str, tau: complex, z: complex) -> tuple[complex, complex]:
    return (-1 / tau, z / tau) if law == "S" else (tau + 1, z)


def modified_character_id(key: str, m: int) -> CharacterId:
    """The six modified characters that span the modular-invariant space."""
    table = {
        "p0": (0, Sector.plus), "p1": (1, Sector.plus),
        "m0": (0, Sector.minus), "m1": (1, Sector.minus),
        "tp": (1 if m % 2 == 0 else 0, Sector.twist_plus),
        "tm": (1, Sector.twist_minus),
    }
    if key not in table:
        raise ValueError(f"unknown character key {key!r}; expected one of {', '.join(CHARACTER_KEYS)}")
    m2, sector = table[key]
    return CharacterId(WeightParams(m, m2), sector, modified=True)


def modified_six(m: int, tau, z, p: EvalParams = DEFAULT_PARAMS, keys=CHARACTER_KEYS) -> dict[str, complex]:
    return {k: character(modified_character_id(k, m), tau, z, p) for k in keys}


def _combo(law: str, key: str, m: int, b: dict[str, complex], tau: complex, z: complex) -> complex:
    """Right side of the general-``m`` closure law for ``key``, given the
    characters ``b`` at ``(τ, z)``."""
    if law == "S":
        e = cmath.exp(PI_I * m * z * z / (2 * tau))
        w = cmath.exp(PI_I * m / 2)
        k = cmath.exp(-PI_I * m / 4)
        return {
            "p0": lambda: -0.5 * k * e * ((1 - w) * b["p1"] - (w + 1) * b["p0"]),
            "p1": lambda: -0.5 * k * e * ((1 + w) * b["p1"] + (w - 1) * b["p0"]),
            "m0": lambda: -0.5 * e * (b["tm"] - w * b["tp"]),
            "m1": lambda: -0.5 * e * (b["tm"] + w * b["tp"]),
            # the phase e^{-πim/2} follows from the Å3 <-> Å6 S-law
            "tp": lambda: w.conjugate() * e * (b["m0"] - b["m1"]),
            "tm": lambda: -e * (b["m0"] + b["m1"]),
        }[key]()
    eps = cmath.exp(-(m / 8 + 11 / 24) * PI_I)
    return {
        "p0": lambda: eps * b["m0"],
        "p1": lambda: eps * b["m1"],
        "m0": lambda: -eps * b["p0"],
        "m1": lambda: eps * b["p1"],
        "tp": lambda: cmath.exp((m / 2 - 1 / 12) * PI_I) * b["tp"],
        "tm": lambda: cmath.exp(-PI_I / 12) * b["tm"],
    }[key]()


_NEEDS = {
    "S": {"p0": ("p0", "p1"), "p1": ("p0", "p1"), "m0": ("tm", "tp"), "m1": ("tm", "tp"),
          "tp": ("m0", "m1"), "tm": ("m0", "m1")},
    "T": {"p0": ("m0",), "p1": ("m1",), "m0": ("p0",), "m1": ("p1",), "tp": ("tp",), "tm": ("tm",)},
}


def closure_relation(law: str, key: str, m: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """S or T law of one modified character at general level ``m``."""
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = character(modified_character_id(key, m), *_moved(law, tau, z), p)
    b = modified_six(m, tau, z, p, _NEEDS[law][key])
    return lhs, _combo(law, key, m, b, tau, z)


def m2_closure_relation(law: str, key: str, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """The ``m = 2`` laws in their reduced form (one or two terms each)."""
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = character(modified_character_id(key, 2), *_moved(law, tau, z), p)
    needs = {"S": {"p0": ("p1",), "p1": ("p0",)}, "T": {}}[law].get(key, _NEEDS[law][key])
    b = modified_six(2, tau, z, p, needs)
    e = cmath.exp(PI_I * z * z / tau)
    if law == "S":
        rhs = {
            "p0": lambda: 1j * e * b["p1"],
            "p1": lambda: -1j * e * b["p0"],
            "m0": lambda: -0.5 * e * (b["tm"] + b["tp"]),
            "m1": lambda: -0.5 * e * (b["tm"] - b["tp"]),
            "tp": lambda: -e * (b["m0"] - b["m1"]),
            "tm": lambda: -e * (b["m0"] + b["m1"]),
        }[key]()
    else:
        e7, e12 = cmath.exp(7 * PI_I / 24), cmath.exp(-PI_I / 12)
        rhs = {
            "p0": lambda: -e7 * b["m0"],
            "p1": lambda: -e7 * b["m1"],
            "m0": lambda: e7 * b["p0"],
            "m1": lambda: -e7 * b["p1"],
            "tp": lambda: -e12 * b["tp"],
            "tm": lambda: e12 * b["tm"],
        }[key]()
    return lhs, rhs


# --- building blocks -----------------------------------------------------------

_A_TILDE_S = {
    # i -> (target, (τ-coefficient, constant) of the shift c with factor e^{(2πim/τ)(z/2-c)(z/2+c)})
    1: (2, (-0.25, 0.25)),
    2: (1, (0.25, 0.25)),
    3: (6, (-0.5, 0.25)),
    4: (5, (0.0, 0.25)),
    5: (4, (-0.25, 0.0)),
    6: (3, (0.25, 0.5)),
}
_A_TILDE_T = {1: 3, 2: 4, 3: 2, 4: 1, 5: 5, 6: 6}


def a_tilde_relation(law: str, i: int, m: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """S and T laws of ``Ã^{[m]}_i``."""
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = a_tilde(i, m, *_moved(law, tau, z), p)
    if law == "T":
        phase = cmath.exp(PI_I * m) if i == 6 else 1
        return lhs, phase * a_tilde(_A_TILDE_T[i], m, tau, z, p)
    j, (a, b) = _A_TILDE_S[i]
    c = a * tau + b
    factor = tau * cmath.exp(2 * PI_I * m / tau * (z / 2 - c) * (z / 2 + c))
    return lhs, factor * a_tilde(j, m, tau, z, p)


_A_RING_S = {1: (2, 0.25), 2: (1, -0.25), 3: (6, 0.5), 4: (5, 0.0), 5: (4, 0.0), 6: (3, -0.5)}
_A_RING_T = {1: (3, -0.125), 2: (4, -0.125), 3: (2, -0.125), 4: (1, -0.125), 5: (5, 0.0), 6: (6, 0.5)}


def a_ring_relation(law: str, i: int, m: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """S and T laws of ``Å^{[m]}_i``; the phases are multiples of ``πim``."""
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = a_ring(i, m, *_moved(law, tau, z), p)
    if law == "S":
        j, ph = _A_RING_S[i]
        pref = cmath.exp(PI_I * m * ph) * tau * cmath.exp(PI_I * m * z * z / (2 * tau))
    else:
        j, ph = _A_RING_T[i]
        pref = cmath.exp(PI_I * m * ph)
    return lhs, pref * a_ring(j, m, tau, z, p)


def m2_a_ring_relation(law: str, i: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """The ``m = 2`` specialisation of the ``Å`` laws with explicit constants."""
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = a_ring(i, 2, *_moved(law, tau, z), p)
    if law == "S":
        c, j = {1: (1j, 2), 2: (-1j, 1), 3: (-1, 6), 4: (1, 5), 5: (1, 4), 6: (-1, 3)}[i]
        c *= tau * cmath.exp(PI_I * z * z / tau)
    else:
        e4 = cmath.exp(-PI_I / 4)
        c, j = {1: (e4, 3), 2: (e4, 4), 3: (e4, 2), 4: (e4, 1), 5: (1, 5), 6: (-1, 6)}[i]
    return lhs, c * a_ring(j, 2, tau, z, p)


_G_S = {
    (1, "+"): (-0.5, (2, "+")), (1, "-"): (-0.5, (2, "-")),
    (2, "+"): (-2, (1, "+")), (2, "-"): (-2, (1, "-")),
    (3, "+"): (-1, (3, "-")), (3, "-"): (-1, (3, "+")),
}
_G_T = {
    (1, "+"): (cmath.exp(0.75 * PI_I), (1, "-")), (1, "-"): (cmath.exp(0.75 * PI_I), (1, "+")),
    (2, "+"): (1, (3, "+")), (2, "-"): (cmath.exp(0.25 * PI_I), (3, "-")),
    (3, "+"): (1, (2, "+")), (3, "-"): (cmath.exp(0.25 * PI_I), (2, "-")),
}


def g_relation(law: str, i: int, sign: str, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """S and T laws of ``g_i^{(±)}``."""
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = g_function(i, sign, *_moved(law, tau, z), p)
    if law == "S":
        c, (j, sg) = _G_S[(i, sign)]
        c = c * tau * cmath.exp(PI_I * z * z / tau)
    else:
        c, (j, sg) = _G_T[(i, sign)]
    return lhs, c * g_function(j, sg, tau, z, p)


def a_ring_g_relation(k: int, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """``Å^{[2]}`` sums and differences as ``g`` functions (``k = 1..6``)."""
    tau, z = check_tau(tau), complex(z)
    a = lambda i: a_ring(i, 2, tau, z, p)  # noqa: E731
    g = lambda i, s: g_function(i, s, tau, z, p)  # noqa: E731
    table = {
        1: lambda: (a(1) + a(2), 2j * g(1, "-")),
        2: lambda: (a(3) + a(4), -2j * g(1, "+")),
        3: lambda: (a(1) - a(2), g(2, "-")),
        4: lambda: (a(5) - a(6), 1j * g(2, "+")),
        5: lambda: (a(3) - a(4), 1j * g(3, "-")),
        6: lambda: (a(5) + a(6), 1j * g(3, "+")),
    }
    if k not in table:
        raise ValueError("k must be in 1..6")
    return table[k]()


def denominator_relation(law: str, kind: str, tau, z, p: EvalParams = DEFAULT_PARAMS) -> tuple[complex, complex]:
    """S and T laws of the three denominators.

    ``S``: ``R+ -> -τR+``, ``R- -> -τRtw``, ``Rtw -> -τR-``;
    ``T``: ``R+ -> e^{11πi/24}R-``, ``R- -> e^{11πi/24}R+``, ``Rtw -> e^{πi/12}Rtw``.
    """
    law = _law(law)
    tau, z = check_tau(tau), complex(z)
    lhs = n3_denominator(kind, *_moved(law, tau, z), p)
    if law == "S":
        target = {"plus": "plus", "minus": "twisted", "twisted": "minus"}[kind]
        return lhs, -tau * n3_denominator(target, tau, z, p)
    target, phase = {
        "plus": ("minus", 11 / 24), "minus": ("plus", 11 / 24), "twisted": ("twisted", 1 / 12),
    }[kind]
    return lhs, cmath.exp(PI_I * phase) * n3_denominator(target, tau, z, p)


__all__ = [
    "CHARACTER_KEYS", "LAWS", "modified_character_id", "modified_six", "closure_relation",
    "m2_closure_relation", "a_tilde_relation", "a_ring_relation", "m2_a_ring_relation",
    "g_relation", "a_ring_g_relation", "denominator_relation",
]
