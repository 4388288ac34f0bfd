"""Shared plumbing: exact half-integers, evaluation parameters, errors and
the adaptive windowed series summation used by every q-series."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import numpy as np


class MockCharError(Exception):
    """Base class for evaluation errors raised by this package."""


class TruncationExceeded(MockCharError):
    """A series did not meet its stop rule within ``max_terms`` terms."""


class PoleError(MockCharError):
    """A denominator came within ``pole_eps`` of zero.

    ``j`` is the offending summation index (or ``None`` for theta zeros).
    """

    def __init__(self, message: str, j: int | None = None):
        super().__init__(message)
        self.j = j


class NonFiniteValue(MockCharError, ArithmeticError):
    """Overflow or NaN produced during evaluation."""


class UnknownAsymptotic(MockCharError, KeyError):
    """No tabulated leading-order asymptotic exists for this character."""


class CaseAborted(MockCharError):
    """Too many samples of an identity case failed for non-pole reasons."""


@dataclass(frozen=True, order=True)
class HalfInt:
    """Exact half-integer ``twice / 2``."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, (int, np.integer)) or isinstance(self.twice, bool):
            raise TypeError(f"twice must be an int, got {self.twice!r}")
        object.__setattr__(self, "twice", int(self.twice))

    @classmethod
    def of(cls, value: "HalfLike") -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            return cls(2 * int(value))
        doubled = Fraction(value) * 2
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self) -> float:
        return self.twice / 2

    def __add__(self, other: "HalfLike") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: "HalfLike") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: "HalfLike") -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __mul__(self, n: int) -> "HalfInt":
        if not isinstance(n, (int, np.integer)):
            return NotImplemented
        return HalfInt(self.twice * int(n))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer() else f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


HalfLike = Union[HalfInt, int, float, Fraction, str]


def half(value: HalfLike) -> HalfInt:
    return HalfInt.of(value)


@dataclass(frozen=True)
class TauPoint:
    """A point of the upper half-plane."""

    tau: complex

    def __post_init__(self):
        tau = complex(self.tau)
        if not (math.isfinite(tau.real) and math.isfinite(tau.imag)) or tau.imag <= 0:
            raise ValueError(f"tau must lie in the upper half-plane, got {tau!r}")
        object.__setattr__(self, "tau", tau)

    def __complex__(self) -> complex:
        return self.tau


def check_tau(tau) -> complex:
    """Coerce ``tau`` to complex and validate ``Im tau > 0``."""
    return TauPoint(complex(tau)).tau


@dataclass(frozen=True)
class EvalParams:
    """Truncation and pole-detection controls for series evaluation.

    ``term_tol`` is the per-term cutoff, measured against the largest term
    in the window (so it is absolute whenever the series is O(1)).
    """

    term_tol: float = 1e-16
    max_terms: int = 4096
    pole_eps: float = 1e-10
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.term_tol > 0:
            raise ValueError("term_tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")
        if not self.pole_eps > 0:
            raise ValueError("pole_eps must be positive")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be at least 1")

    def as_dict(self) -> dict:
        return {
            "term_tol": self.term_tol,
            "max_terms": self.max_terms,
            "pole_eps": self.pole_eps,
            "consecutive_small": self.consecutive_small,
        }


DEFAULT_PARAMS = EvalParams()

TWO_PI_I = 2j * math.pi


def ensure_finite(value: complex, what: str = "value") -> complex:
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteValue(f"{what} is not finite")
    return value


def expi(x: complex) -> complex:
    """``exp(2*pi*i*x)``."""
    return cmath.exp(TWO_PI_I * x)


def q_pow(tau: complex, alpha) -> complex:
    """``q**alpha`` read as ``exp(2*pi*i*alpha*tau)``."""
    return cmath.exp(TWO_PI_I * float(alpha) * tau)


def sqrt_minus_i_tau(tau: complex) -> complex:
    """Principal branch of ``(-i tau)**(1/2)``."""
    return cmath.sqrt(-1j * tau)


def log1m_exp(w: np.ndarray) -> np.ndarray:
    """``log(1 - exp(w))`` for complex ``w`` without overflow.

    The imaginary part is only meaningful modulo 2*pi.
    """
    w = np.asarray(w, dtype=complex)
    out = np.empty_like(w)
    small = w.real < 0
    big = ~small
    # exact zeros give -inf, which callers treat as poles
    with np.errstate(divide="ignore"):
        out[small] = np.log1p(-np.exp(w[small]))
        out[big] = w[big] + 1j * math.pi + np.log1p(-np.exp(-w[big]))
    return out


def window_sum(
    log_terms: Callable[[np.ndarray], np.ndarray],
    center: float,
    width: float,
    p: EvalParams,
    what: str = "series",
) -> complex:
    """Sum ``exp(log_terms(j))`` over integers ``j`` around ``center``.

    ``width`` is a first guess for the half-width of the window. The window
    is doubled until the outermost ``consecutive_small`` terms on each tail
    fall below ``term_tol`` times the largest term.
    """
    c = int(round(center))
    half_width = max(int(math.ceil(width)) + p.consecutive_small + 2, 4)
    while True:
        if 2 * half_width + 1 > p.max_terms:
            raise TruncationExceeded(f"{what}: window exceeds max_terms={p.max_terms}")
        js = np.arange(c - half_width, c + half_width + 1)
        logs = log_terms(js)
        mags = logs.real
        if np.any(np.isnan(mags)):
            raise NonFiniteValue(f"{what}: NaN term")
        peak = mags.max()
        if peak > 700:
            raise NonFiniteValue(f"{what}: term overflow")
        cut = math.log(p.term_tol) + max(peak, -700.0)
        k = p.consecutive_small
        if np.all(mags[:k] < cut) and np.all(mags[-k:] < cut):
            break
        half_width *= 2
    terms = np.exp(logs)
    total = complex(math.fsum(terms.real), math.fsum(terms.imag))
    return ensure_finite(total, what)


def gaussian_width(quad: float, p: EvalParams, spread: float = 0.0) -> float:
    """Half-width at which ``exp(-quad*j**2)`` drops below ``term_tol``."""
    return math.sqrt(-math.log(p.term_tol) / quad) + spread
