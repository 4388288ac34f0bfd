"""Built-in identity corpus.

Case ids describe the identity; cases at ``m = 2`` start with ``m2-``,
report-only probes of open statements start with ``conjecture-`` and carry
the ``exploratory`` tag. Every case also carries topic tags (see
``TOPICS``) so that coverage can be checked by topic.
"""
from __future__ import annotations

import cmath
import math
from functools import lru_cache

from . import appell, asymptotics, closed_forms, modular
from .base import HalfInt, check_tau, half
from .characters import (
    CharacterId,
    Sector,
    WeightParams,
    a_ring,
    a_tilde,
    a_tilde6_alt,
    character,
    doubling_relation,
    numerator_twisted,
    p_function,
    q_function,
    sector_arguments,
    sector_numerator,
)
from .harness import EvalPoint, IdentityCase, SampleBox
from .qseries import dedekind_eta, jacobi_theta, theta, theta_product_identity
from .zwegers import phi_add, phi_tilde, phi_tilde_elliptic_check, r_function

PI_I = 1j * math.pi

TOPICS = (
    "eta-laws", "theta-s-law", "theta-products", "theta-differences",
    "r-half-period", "appell-swap", "appell-conjugate", "appell-t-law", "lattice-shift",
    "s-shift-difference", "argument-doubling", "denominator-identity",
    "completion-s-independence", "completion-swap", "completion-s-law", "completion-t-law",
    "half-period-shift", "level-one-triviality",
    "a-tilde-alternative", "a-ring-specialisation", "a-tilde-laws", "a-ring-laws",
    "g-laws", "a-ring-g-relations", "m2-a-ring-laws",
    "twisted-numerators", "twisted-parity", "parity-dependence",
    "denominator-laws", "modular-closure", "m2-modular-closure",
    "m2-modified-closed-forms", "m2-honest-closed-forms", "m2-sum-rule", "m2-invariant-span",
    "correction-closed-forms", "half-level-closed-forms",
    "level-doubling", "m2-level-doubling",
    "m4-modified-closed-forms", "m4-honest-closed-forms", "m4-sum-rule",
    "pq-shift", "pq-doubling", "pq-closed-forms",
    "numerator-vanishing", "theta-asymptotics", "character-asymptotics", "theta-ratio",
)

BOX = SampleBox()
# smaller |Im z| keeps e^{±2πiz} factors O(1) where z is doubled or shifted by τ
NARROW = SampleBox(im_z=(-0.15, 0.15))


def _case(cid, pair, topics, *, tol=1e-8, box=BOX, n=100, desc="", tags=()):
    topics = (topics,) if isinstance(topics, str) else tuple(topics)
    return IdentityCase(
        cid, pair=pair, sample_box=box, n_samples=n, tolerance=tol,
        tags=topics + tuple(tags), description=desc,
    )


def _box(base: SampleBox = BOX, **aux) -> SampleBox:
    return SampleBox(base.re_tau, base.im_tau, base.re_z, base.im_z, dict(aux))


def _chid(m, m2, sector, modified=False):
    return CharacterId(WeightParams(m, m2), Sector.parse(sector), modified, allow_zero=True)


# --- q-series ----------------------------------------------------------------------


def _eta_law(pt, p):
    tau = pt.tau
    if pt["law"] == "S":
        return dedekind_eta(-1 / tau, p), cmath.sqrt(-1j * tau) * dedekind_eta(tau, p)
    return dedekind_eta(tau + 1, p), cmath.exp(PI_I / 12) * dedekind_eta(tau, p)


def _theta_s(pt, p):
    tau, z, ab = pt.tau, pt.z, pt["ab"]
    a, b = int(ab[0]), int(ab[1])
    rhs = (-1j) ** (a * b) * cmath.sqrt(-1j * tau) * cmath.exp(PI_I * z * z / tau) * theta(ab[::-1], tau, z, p)
    return theta(ab, -1 / tau, z / tau, p), rhs


def _theta_diff(pt, p):
    a, b, c = closed_forms.theta_pair_difference(pt.tau, pt.z, p)
    return (a, c) if pt["which"] == "level-one" else (b, c)


# --- Appell-Lerch --------------------------------------------------------------------

# (m, s) pairs for the structural laws
_INDICES = [(half(m), half(s)) for m, s in ((1, 0), ("1/2", "1/2"), (2, 1), (2, "1/2"), ("3/2", -1), (1, -1))]


def _zz(pt):
    return pt.z + pt["w"], pt.z - pt["w"], pt["t"]


def _appell_box(**extra):
    return _box(NARROW, ms=_INDICES, w=(-0.3, 0.3), t=(-0.5, 0.5), **extra)


def _swap(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    return appell.phi(m, s, pt.tau, z2, z1, t, p), appell.phi(m, 1 - s, pt.tau, z1, z2, t, p)


def _conjugate(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    return appell.phi2(m, s, pt.tau, z1, z2, t, p), appell.phi1(m, s, pt.tau, -z2, -z1, t, p)


def _t_law(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    fn = phi_tilde if pt["modified"] else appell.phi
    if not (m + s).is_integer():
        s = s + half("1/2")
    return fn(m, s, pt.tau + 1, z1, z2, t, p), fn(m, s, pt.tau, z1, z2, t, p)


def _lattice(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    a, b = pt["ab"]
    fn = phi_tilde if pt["modified"] else appell.phi
    sign = (-1) ** ((s.twice * a) % 2)
    return fn(m, s, pt.tau, z1 + a, z2 + b, t, p), sign * fn(m, s, pt.tau, z1, z2, t, p)


# θ_{k,m} - θ_{-k,m} vanishes identically for 2k ≡ 0 mod 2m; such (m, s) leave
# only cancellation noise on both sides
_S_SHIFT_INDICES = [(half(m), half(s)) for m, s in ((2, 1), (2, "1/2"), ("3/2", -1), (1, "1/2"), (3, 1))]


def _s_shift(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    a = pt["a"]
    lhs = appell.phi(m, s, pt.tau, z1, z2, t, p) - appell.phi(m, s + a, pt.tau, z1, z2, t, p)
    return lhs, appell.phi_s_shift_difference(m, s, pt.tau, z1, z2, t, a, p)


def _doubling(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    fn = phi_tilde if pt["modified"] else appell.phi
    return fn(m, s, 2 * pt.tau, z1, z2, t, p), appell.phi_double_tau(m, s, pt.tau, z1, z2, t, p, fn=fn)


def _denominator_identity(pt, p):
    z1, z2, t = _zz(pt)
    return appell.phi(1, pt["s"], pt.tau, z1, z2, t, p), appell.denominator_product(pt.tau, z1, z2, t, p)


# --- completion ------------------------------------------------------------------------


def _r_half(pt, p):
    j, m = pt["jm"]
    sign = pt["sign"]
    w = pt.z
    return r_function(j, m, pt.tau, w + sign * 0.5, p), cmath.exp(sign * PI_I * float(j)) * r_function(j, m, pt.tau, w, p)


def _tilde_s_indep(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    return phi_tilde(m, s, pt.tau, z1, z2, t, p), phi_tilde(m, s + pt["k"], pt.tau, z1, z2, t, p)


def _tilde_swap(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    return phi_tilde(m, s, pt.tau, z2, z1, t, p), phi_tilde(m, s, pt.tau, z1, z2, t, p)


def _tilde_s_law(pt, p):
    (m, s), (z1, z2, t) = pt["ms"], _zz(pt)
    if not s.is_integer():
        s = s + half("1/2")
    tau = pt.tau
    lhs = phi_tilde(m, s, -1 / tau, z1 / tau, z2 / tau, t, p)
    return lhs, tau * cmath.exp(2 * PI_I * float(m) * z1 * z2 / tau) * phi_tilde(m, s, tau, z1, z2, t, p)


def _half_period(pt, p):
    m, s = pt["ms"]
    return phi_tilde_elliptic_check(m, s, pt.tau, pt.z, pt["a"], pt["b"], p)


def _level_one(pt, p):
    z1, z2, t = _zz(pt)
    s = pt["s"]
    return phi_tilde(1, s, pt.tau, z1, z2, t, p), appell.phi(1, s, pt.tau, z1, z2, t, p)


def _r_closed(pt, p):
    shifted = pt["shifted"]
    w = pt.tau / 4 - (0.5 if shifted else 0)
    lhs = r_function("1/2", 1, pt.tau, w, p) + r_function("3/2", 1, pt.tau, w, p)
    return lhs, closed_forms.r_closed_form("1/2", shifted, pt.tau) + closed_forms.r_closed_form("3/2", shifted, pt.tau)


def _correction_closed(pt, p):
    shifted, form = pt["shifted"], pt["form"]
    tau, z = pt.tau, pt.z
    d = 0.5 if shifted else 0.0
    if form == "theta-difference":
        return phi_add(1, "1/2", tau, z + tau / 4 - d, z - tau / 4 + d, 0, p), closed_forms.phi_add_half_theta(shifted, tau, z, p)
    t = tau / 8 if form == "eighth" else 0
    lhs = phi_add(1, "1/2", 2 * tau, z + tau / 2 - d, z - tau / 2 + d, t, p)
    return lhs, closed_forms.phi_add_closed_form(shifted, tau, z, form == "eighth", p)


def _half_level_closed(pt, p):
    s, shifted = pt["s"], pt["shifted"]
    tau, z = pt.tau, pt.z
    d = 0.5 if shifted else 0.0
    lhs = appell.phi(1, s, 2 * tau, z + tau / 2 - d, z - tau / 2 + d, tau / 8, p)
    return lhs, closed_forms.phi_half_closed_form(s, shifted, tau, z, p)


# --- building blocks -------------------------------------------------------------------


def _a6_alt(pt, p):
    m = pt["m"]
    return a_tilde(6, m, pt.tau, pt.z, p), a_tilde6_alt(m, pt.tau, pt.z, p)


def _a_special(pt, p):
    m, k = pt["m"], pt["k"]
    tau, z = pt.tau, pt.z
    half_m = HalfInt(m)
    ar = lambda i: a_ring(i, m, tau, z, p)  # noqa: E731
    if k in (1, 2):
        lhs = phi_tilde(half_m, 0 if k == 1 else "1/2", 2 * tau, z + tau / 2 - 0.5, z - tau / 2 + 0.5, tau / 8, p)
        return lhs, 0.5 * (ar(2) + (ar(1) if k == 1 else -ar(1)))
    if k in (3, 4):
        lhs = phi_tilde(half_m, 0 if k == 3 else "1/2", 2 * tau, z + tau / 2, z - tau / 2, tau / 8, p)
        return lhs, 0.5 * (ar(4) + (ar(3) if k == 3 else -ar(3)))
    if k == 5:
        return phi_tilde(half_m, 0, 2 * tau, z - 0.5, z + 0.5, 0, p), ar(5)
    return phi_tilde(half_m, 0, 2 * tau, z + tau - 0.5, z - tau + 0.5, tau / 2, p), ar(6)


def _relation(fn, *keys):
    def pair(pt, p):
        return fn(*(pt[k] for k in keys), pt.tau, pt.z, p)
    return pair


def _g_rel(pt, p):
    i, sign = pt["g"]
    return modular.g_relation(pt["law"], i, sign, pt.tau, pt.z, p)


# --- numerators and characters ---------------------------------------------------------


def _twisted_numerators(pt, p):
    m, m2 = pt["w"]
    w = WeightParams(m, m2)
    tau, z = pt.tau, pt.z
    modified = pt["modified"]
    if pt["twist"] == "plus":
        lhs = numerator_twisted(w, "1/2", "1/2", tau, z + tau / 2, -z + tau / 2, tau / 4, p, modified)
        return lhs, sector_numerator(w, Sector.twist_plus, tau, z, p, modified)
    lhs = numerator_twisted(w, "-1/2", "-1/2", tau, z + tau / 2, -z + tau / 2, tau / 4, p, modified)
    return lhs, sector_numerator(w, Sector.twist_minus, tau, z, p, modified)


def _a_ring_numerators(pt, p):
    m, m2 = pt["w"]
    w = WeightParams(m, m2)
    tau, z = pt.tau, pt.z
    ar = lambda i: a_ring(i, m, tau, z, p)  # noqa: E731
    sign = (-1) ** (m2 + 1)
    sector = Sector.parse(pt["sector"])
    lhs = sector_numerator(w, sector, tau, z, p, modified=True)
    if sector is Sector.plus:
        return lhs, 0.5 * (ar(2) + sign * ar(1))
    if sector is Sector.minus:
        return lhs, 0.5 * (ar(4) + sign * ar(3))
    if sector is Sector.twist_plus:
        return lhs, 0.5 * (1 + (-1) ** (m + m2 + 1)) * ar(6)
    return lhs, 0.5 * (1 + sign) * ar(5)


def _twisted_parity(pt, p):
    # of two neighbouring labels exactly one numerator survives
    m, sector = pt["m"], Sector.parse(pt["sector"])
    tau, z = pt.tau, pt.z
    hm = HalfInt(m)
    z1, z2, t = sector_arguments(sector, tau, z)
    both = sum(phi_tilde(hm, HalfInt(m2 + 1), 2 * tau, z1, z2, t, p) for m2 in (0, 1))
    target = a_ring(6, m, tau, z, p) if sector is Sector.twist_plus else a_ring(5, m, tau, z, p)
    return both, target


def _parity_dependence(pt, p):
    m, m2, sector = pt["m"], pt["m2"], pt["sector"]
    return (character(_chid(m, m2, sector, True), pt.tau, pt.z, p),
            character(_chid(m, m2 + 2, sector, True), pt.tau, pt.z, p))


def _series_vs_closed(pt, p):
    cid = pt["char"]
    return character(cid, pt.tau, pt.z, p), closed_forms.closed_form_character(cid, pt.tau, pt.z, p)


def _sum_rule(m):
    def pair(pt, p):
        sector, j = pt["sector"], pt["j"]
        honest = character(_chid(m, j, sector), pt.tau, pt.z, p) + character(_chid(m, j + 2, sector), pt.tau, pt.z, p)
        return honest, 2 * character(_chid(m, j, sector, True), pt.tau, pt.z, p)
    return pair


def _span_law(pt, p):
    tau, z = pt.tau, pt.z
    ch = lambda m2, sec, t, zz: character(_chid(2, m2, sec), t, zz, p)  # noqa: E731
    e = cmath.exp(PI_I * z * z / tau)
    if pt["law"] == "S":
        lhs = ch(0, "plus", -1 / tau, z / tau) + ch(2, "plus", -1 / tau, z / tau)
        return lhs, 2j * e * ch(1, "plus", tau, z)
    lhs = ch(0, "plus", tau + 1, z) + ch(2, "plus", tau + 1, z)
    return lhs, -cmath.exp(7 * PI_I / 24) * (ch(0, "minus", tau, z) + ch(2, "minus", tau, z))


def _doubling_rel(pt, p):
    return doubling_relation(pt["rel"], pt["m"], pt.tau, pt.z, p)


def _m2_level_doubling(pt, p):
    tau, z = pt.tau, pt.z
    k = pt["k"]
    if k == "a3":
        return 2 * a_ring(3, 2, 2 * tau, 2 * z, p), a_ring(6, 2, tau / 2, z, p)
    return doubling_relation(k, 2, tau, z, p)


# θ_{s,m/2} - θ_{-s,m/2} vanishes identically when 2s ≡ 0 mod m; those
# indices make both sides zero and are left out
_PQ_SHIFTS = [(m, half(s)) for m, s in ((2, "1/2"), (3, "1/2"), (3, 1), (4, "1/2"), (4, 1), (4, "3/2"))]


def _pq_shift(pt, p):
    (m, s), which = pt["ms"], pt["which"]
    tau, z = pt.tau, pt.z
    fn = p_function if which == "P" else q_function
    sf = float(s)
    lhs = fn(m, s + 1, tau, z, p) - fn(m, s, tau, z, p)
    diff = jacobi_theta(s, HalfInt(m), 2 * tau, 2 * z, p) - jacobi_theta(-s, HalfInt(m), 2 * tau, 2 * z, p)
    rhs = -cmath.exp(2 * PI_I * tau * (sf / 2 - sf * sf / m)) * diff
    if which == "Q":
        rhs *= cmath.exp(-PI_I * sf)
    return lhs, rhs


def _pq_doubling(pt, p):
    m, s, k = pt["m"], pt["s"], pt["k"]
    tau, z = pt.tau, pt.z
    s2 = s * 2
    if k == 1:
        rhs = p_function(2 * m, s2, tau, z, p) + cmath.exp(-2 * PI_I * float(s)) * q_function(2 * m, s2, tau, z, p)
        return 2 * p_function(m, s, 2 * tau, 2 * z, p), rhs
    first = p_function(m, s, 2 * tau, 2 * z, p)
    second = p_function(m, s + half("1/2"), 2 * tau, 2 * z, p)
    if k == 2:
        return p_function(2 * m, s2, tau, z, p), first + second
    return q_function(2 * m, s2, tau, z, p), cmath.exp(2 * PI_I * float(s)) * (first - second)


def _pq_closed(pt, p):
    which, m, s = pt["pq"]
    tau, z = pt.tau, pt.z
    if m == 2:
        return p_function(2, s, tau, z, p), closed_forms.p2_closed_form(s, tau, z, p)
    fn = p_function if which == "P" else q_function
    return fn(4, s, tau, z, p), closed_forms.pq4_closed_form(which, s, tau, z, p)


def _vanishing(pt, p):
    (m, m2), n, k = pt["w"], pt["n"], pt["k"]
    tau = pt.tau
    w = WeightParams(m, m2)
    ms, ss = w.appell_index
    z1, z2, t = sector_arguments(Sector.minus, tau, n + k * tau)
    return appell.phi1(ms, ss, 2 * tau, z1, z2, t, p), appell.phi2(ms, ss, 2 * tau, z1, z2, t, p)


def _theta_ratio(kind):
    def pair(pt, p):
        return closed_forms.theta_ratio_relation(kind, pt.tau, pt.z, p)
    return pair


# --- asymptotics ------------------------------------------------------------------------


def _char_ladder(cid):
    def pair(pt, p):
        actual = closed_forms.closed_form_character(cid, pt.tau, pt.z, p, reduce=True)
        return actual, asymptotics.asymptotic_prediction(cid, pt["a"]).value(pt.tau, pt["a"])
    return pair


def _primitive_ladder(kind):
    def pair(pt, p):
        if kind == "eta":
            return dedekind_eta(pt.tau, p, reduce=True), asymptotics.eta_asymptotic(pt.tau)
        return theta(kind, pt.tau, pt.z, p, reduce=True), asymptotics.theta_asymptotic(kind, pt.tau, pt["a"])
    return pair


def _ladder_case(cid, pair, topics, a_values=(0.0,), tol=1e-4, desc=""):
    return IdentityCase(
        cid, pair=pair, sample_box=SampleBox(aux={"a": list(a_values)}), tolerance=tol,
        tags=(topics, "ladder"), description=desc, kind="ladder",
    )


# --- open statements (report only) --------------------------------------------------------

_FIT_Z = (0.11 + 0.03j, 0.29 - 0.05j)


def _level_four_plus(tau, z, p):
    return character(_chid(4, 0, "plus", True), tau, z, p)


def fit_theta_square_coefficients(tau, p) -> tuple[complex, complex]:
    """Solve ``η(τ/2)η(2τ)·ch̃ = C1 ϑ01² + C2 ϑ10²`` for ``(C1, C2)`` from two
    fixed ``z`` samples (modified plus character, ``m = 4``, ``m2 = 0``)."""
    tau = check_tau(tau)
    pref = dedekind_eta(tau / 2, p) * dedekind_eta(2 * tau, p)
    rows = [(theta("01", tau, z, p) ** 2, theta("10", tau, z, p) ** 2, pref * _level_four_plus(tau, z, p)) for z in _FIT_Z]
    (a, b, u), (c, d, v) = rows
    det = a * d - b * c
    return (u * d - b * v) / det, (a * v - u * c) / det


def _fit_probe(pt, p):
    c1, c2 = fit_theta_square_coefficients(pt.tau, p)
    tau, z = pt.tau, pt.z
    lhs = dedekind_eta(tau / 2, p) * dedekind_eta(2 * tau, p) * _level_four_plus(tau, z, p)
    return lhs, c1 * theta("01", tau, z, p) ** 2 + c2 * theta("10", tau, z, p) ** 2


def _fit_duality_probe(pt, p):
    c1s, _ = fit_theta_square_coefficients(-1 / pt.tau, p)
    _, c2 = fit_theta_square_coefficients(pt.tau, p)
    return c1s, -c2


def _weighted_sum_probe(m, labels, weights):
    def pair(pt, p):
        honest = sum(wt * character(_chid(m, m2, "plus"), pt.tau, pt.z, p) for m2, wt in zip(labels, weights))
        return honest, sum(weights) * character(_chid(m, labels[0], "plus", True), pt.tau, pt.z, p)
    return pair


def _modified_vanishing_probe(pt, p):
    # holomorphy: the modified minus numerator must vanish where ϑ11 does
    (m, m2), n, k = pt["w"], pt["n"], pt["k"]
    tau = pt.tau
    ms, ss = WeightParams(m, m2).appell_index
    z1, z2, t = sector_arguments(Sector.minus, tau, n + k * tau)
    lhs = appell.phi1(ms, ss, 2 * tau, z1, z2, t, p)
    return lhs, appell.phi2(ms, ss, 2 * tau, z1, z2, t, p) - phi_add(ms, ss, 2 * tau, z1, z2, t, p)


# --- assembly -------------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _build() -> tuple[IdentityCase, ...]:
    c = []
    laws = ["S", "T"]
    ms2 = [(2, 0), (2, 1), (2, 2)]

    # q-series
    c.append(_case("eta-modular-laws", _eta_law, "eta-laws", tol=1e-10, box=_box(law=laws)))
    c.append(_case("theta-s-law", _theta_s, "theta-s-law", tol=1e-9, box=_box(ab=["00", "01", "10", "11"])))
    c.append(_case("theta-product-identities", lambda pt, p: theta_product_identity(pt["g"], pt.tau, pt.z, p),
                   "theta-products", tol=1e-10, box=_box(g=["g1", "g2", "g3"])))
    c.append(_case("theta-index-differences", _theta_diff, "theta-differences", tol=1e-10,
                   box=_box(which=["level-one", "level-two"])))

    # Appell-Lerch
    c.append(_case("lemma-2.7-denominator", _denominator_identity, "denominator-identity", tol=1e-9,
                   box=SampleBox(im_tau=(0.6, 1.6), aux={"s": [0, 1], "w": (-0.3, 0.3), "t": (-0.5, 0.5)}),
                   desc="level-one Appell-Lerch sum equals the theta/eta product"))
    c.append(_case("appell-swap-law", _swap, "appell-swap", tol=1e-10, box=_appell_box()))
    c.append(_case("appell-conjugate-law", _conjugate, "appell-conjugate", tol=1e-10, box=_appell_box()))
    c.append(_case("appell-t-law", _t_law, ("appell-t-law", "completion-t-law"), tol=1e-9,
                   box=_appell_box(modified=[False, True])))
    c.append(_case("appell-lattice-shift", _lattice, "lattice-shift", tol=1e-9,
                   box=_appell_box(ab=[(1, 1), (2, 0), (-1, 1), (1, -3)], modified=[False, True])))
    c.append(_case("appell-s-shift-difference", _s_shift, "s-shift-difference", tol=1e-9,
                   box=_box(NARROW, ms=_S_SHIFT_INDICES, w=(-0.3, 0.3), t=(-0.5, 0.5), a=[1, 2, 3])))
    c.append(_case("appell-argument-doubling", _doubling, "argument-doubling", tol=1e-9,
                   box=_appell_box(modified=[False, True])))

    # completion
    c.append(_case("r-half-period-shift", _r_half, "r-half-period", tol=1e-10,
                   box=_box(jm=[(half("1/2"), 1), (half("3/2"), 1), (half(1), 2), (half("-5/2"), 3)],
                            sign=[1, -1])))
    c.append(_case("completion-shift-independence", _tilde_s_indep, "completion-s-independence", tol=1e-9,
                   box=_appell_box(k=[1, -1, 2])))
    c.append(_case("completion-swap-law", _tilde_swap, "completion-swap", tol=1e-9, box=_appell_box()))
    c.append(_case("completion-s-law", _tilde_s_law, "completion-s-law", tol=1e-9, box=_appell_box()))
    c.append(_case("completion-half-period-shift", _half_period, "half-period-shift", tol=1e-9,
                   box=_box(NARROW, ms=[(half(2), half(0)), (half(1), half(0)), (half("3/2"), half("1/2"))],
                            a=(-0.3, 0.3), b=(-0.3, 0.3))))
    c.append(_case("completion-level-one-trivial", _level_one, "level-one-triviality", tol=1e-12,
                   box=_box(NARROW, s=[0, 1, -1], w=(-0.3, 0.3), t=(-0.5, 0.5))))
    c.append(_case("r-closed-forms", _r_closed, "correction-closed-forms", tol=1e-10, box=_box(shifted=[False, True])))
    c.append(_case("correction-closed-forms", _correction_closed, "correction-closed-forms", tol=1e-9,
                   box=_box(shifted=[False, True], form=["eighth", "zero", "theta-difference"])))
    c.append(_case("appell-half-level-closed-forms", _half_level_closed, "half-level-closed-forms", tol=1e-9,
                   box=_box(NARROW, s=[half("1/2"), half("3/2")], shifted=[False, True])))

    # building blocks
    c.append(_case("a-tilde-sixth-alternative", _a6_alt, "a-tilde-alternative", tol=1e-9, box=_box(m=[1, 2, 3, 4])))
    c.append(_case("a-ring-specialisations", _a_special, "a-ring-specialisation", tol=1e-9,
                   box=_box(NARROW, m=[2, 4], k=[1, 2, 3, 4, 5, 6])))
    c.append(_case("a-ring-specialisations-odd", _a_special, "a-ring-specialisation", tol=1e-9,
                   box=_box(NARROW, m=[1, 3], k=[1, 2, 3, 4, 5])))
    c.append(_case("a-tilde-modular-laws", _relation(modular.a_tilde_relation, "law", "i", "m"), "a-tilde-laws",
                   tol=1e-9, box=_box(law=laws, i=[1, 2, 3, 4, 5, 6], m=[1, 2, 3])))
    c.append(_case("a-ring-modular-laws", _relation(modular.a_ring_relation, "law", "i", "m"), "a-ring-laws",
                   tol=1e-9, box=_box(law=laws, i=[1, 2, 3, 4, 5, 6], m=[1, 2, 3])))
    c.append(_case("g-function-modular-laws", _g_rel, "g-laws", tol=1e-9,
                   box=_box(law=laws, g=[(i, s) for i in (1, 2, 3) for s in "+-"])))
    c.append(_case("m2-a-ring-g-relations", _relation(modular.a_ring_g_relation, "k"), "a-ring-g-relations",
                   tol=1e-9, box=_box(k=[1, 2, 3, 4, 5, 6])))
    c.append(_case("m2-a-ring-modular-laws", _relation(modular.m2_a_ring_relation, "law", "i"), "m2-a-ring-laws",
                   tol=1e-9, box=_box(law=laws, i=[1, 2, 3, 4, 5, 6])))
    c.append(_case("denominator-modular-laws", _relation(modular.denominator_relation, "law", "kind"),
                   "denominator-laws", tol=1e-9, box=_box(law=laws, kind=["plus", "minus", "twisted"])))

    # numerators
    weights = [(1, 0), (1, 1), (2, 0), (2, 1), (3, 2), (4, 3)]
    c.append(_case("twisted-numerator-reduction", _twisted_numerators, "twisted-numerators", tol=1e-9,
                   box=_box(NARROW, w=weights, twist=["plus", "minus"], modified=[False, True])))
    c.append(_case("modified-numerators-from-a-ring", _a_ring_numerators, ("twisted-numerators", "twisted-parity"),
                   tol=1e-9, box=_box(NARROW, w=weights, sector=["plus", "minus", "twist_plus", "twist_minus"])))
    c.append(_case("twisted-parity-selection", _twisted_parity, "twisted-parity", tol=1e-9,
                   box=_box(NARROW, m=[1, 2, 3, 4], sector=["twist_plus", "twist_minus"])))
    c.append(_case("modified-parity-dependence", _parity_dependence, "parity-dependence", tol=1e-10,
                   box=_box(m=[2, 3, 4], m2=[0], sector=["plus", "minus"])))
    c.append(_case("modified-parity-dependence-odd", _parity_dependence, "parity-dependence", tol=1e-10,
                   box=_box(m=[3, 4], m2=[1], sector=["plus", "minus", "twist_minus"])))

    # closure
    c.append(_case("modular-closure-s-law", lambda pt, p: modular.closure_relation("S", pt["key"], pt["m"], pt.tau, pt.z, p),
                   "modular-closure", box=_box(key=list(modular.CHARACTER_KEYS), m=[1, 2, 3])))
    c.append(_case("modular-closure-t-law", lambda pt, p: modular.closure_relation("T", pt["key"], pt["m"], pt.tau, pt.z, p),
                   "modular-closure", box=_box(key=list(modular.CHARACTER_KEYS), m=[1, 2, 3])))
    c.append(_case("m2-modular-closure", lambda pt, p: modular.m2_closure_relation(pt["law"], pt["key"], pt.tau, pt.z, p),
                   "m2-modular-closure", box=_box(law=laws, key=list(modular.CHARACTER_KEYS))))

    # m = 2 characters
    six = [modular.modified_character_id(k, 2) for k in modular.CHARACTER_KEYS]
    c.append(_case("m2-modified-closed-forms", _series_vs_closed, "m2-modified-closed-forms", box=_box(char=six)))
    honest = [_chid(2, m2, sec) for m2, sec in ((0, "plus"), (1, "plus"), (2, "plus"), (0, "minus"), (1, "minus"),
                                                (2, "minus"), (1, "twist_plus"), (1, "twist_minus"))]
    c.append(_case("m2-honest-closed-forms", _series_vs_closed, "m2-honest-closed-forms", box=_box(char=honest)))
    c.append(_case("m2-honest-sum-rule", _sum_rule(2), "m2-sum-rule", tol=1e-9, box=_box(sector=["plus", "minus"], j=[0])))
    c.append(_case("m2-honest-invariant-span", _span_law, "m2-invariant-span", box=_box(law=laws)))
    c.append(_case("m2-level-doubling", _m2_level_doubling, "m2-level-doubling", tol=1e-9,
                   box=_box(NARROW, k=[1, 2, 3, 4, 5, 6, "a3"])))
    c.append(_case("level-doubling-relations", _doubling_rel, "level-doubling", tol=1e-9,
                   box=_box(NARROW, m=[1, 2, 3], rel=[1, 2, 3, 4, 5, 6])))

    # m = 4
    m4 = [_chid(4, m2, sec, mod) for m2 in (1, 3) for sec in ("plus", "minus") for mod in (False, True)]
    c.append(_case("m4-modified-closed-forms", _series_vs_closed, "m4-modified-closed-forms",
                   box=_box(char=[x for x in m4 if x.modified])))
    c.append(_case("m4-honest-closed-forms", _series_vs_closed, "m4-honest-closed-forms",
                   box=_box(char=[x for x in m4 if not x.modified])))
    c.append(_case("m4-honest-sum-rule", _sum_rule(4), "m4-sum-rule", tol=1e-9, box=_box(sector=["plus"], j=[1])))
    c.append(_case("pq-index-shift", _pq_shift, "pq-shift", tol=1e-9,
                   box=_box(NARROW, ms=_PQ_SHIFTS, which=["P", "Q"])))
    c.append(_case("pq-level-doubling", _pq_doubling, "pq-doubling", tol=1e-9,
                   box=_box(NARROW, m=[1, 2], s=[half("1/2"), half(1)], k=[1, 2, 3])))
    pq = [("P", 2, half(s)) for s in ("1/2", 1, "3/2")] + [(w, 4, s) for w in "PQ" for s in (1, 2)]
    c.append(_case("pq-closed-forms", _pq_closed, "pq-closed-forms", tol=1e-9, box=_box(NARROW, pq=pq)))

    # vanishing
    vbox = SampleBox(re_z=(0.0, 0.0), im_z=(0.0, 0.0),
                     aux={"w": [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (4, 1), (4, 3)],
                          "n": [-2, -1, 0, 1, 2], "k": [-2, -1, 0, 1, 2]})
    c.append(_case("numerator-vanishing-lattice", _vanishing, "numerator-vanishing", tol=1e-9, box=vbox))

    # theta ratios
    c.append(_case("prop-9.1-sum", _theta_ratio("sum"), "theta-ratio", tol=1e-9,
                   desc="sum of the two theta ratios at 2τ as an eta quotient at τ"))
    c.append(_case("prop-9.1-diff", _theta_ratio("diff"), "theta-ratio", tol=1e-9,
                   desc="difference of the two theta ratios at 2τ as an eta quotient at τ"))

    # asymptotics
    c.append(_ladder_case("eta-small-tau", _primitive_ladder("eta"), "theta-asymptotics"))
    for ab in ("00", "01", "10"):
        c.append(_ladder_case(f"theta-{ab}-small-tau", _primitive_ladder(ab), "theta-asymptotics"))
    for cid in asymptotics.tabulated_characters():
        name = f"m2-small-tau-{cid.sector.value.replace('_', '-')}-{cid.weight.m2}-{'modified' if cid.modified else 'honest'}"
        c.append(_ladder_case(name, _char_ladder(cid), "character-asymptotics"))

    # report-only probes
    ex = ("exploratory",)
    c.append(_case("conjecture-theta-square-fit", _fit_probe, "open-statements", tags=ex, n=20,
                   desc="modified m=4, m2=0 plus character as C1 ϑ01² + C2 ϑ10² over η(τ/2)η(2τ)"))
    c.append(_case("conjecture-theta-square-duality", _fit_duality_probe, "open-statements", tags=ex, n=20,
                   desc="fitted coefficients: C1(-1/τ) = -C2(τ)"))
    c.append(_case("conjecture-weighted-sum-m4-even", _weighted_sum_probe(4, (0, 2, 4), (1, 2, 1)), "open-statements",
                   tags=ex, n=20, desc="honest plus characters m2=0,2,4 with weights 1,2,1 vs modified"))
    c.append(_case("conjecture-weighted-sum-m3", _weighted_sum_probe(3, (1, 3), (1, 1)), "open-statements",
                   tags=ex, n=20, desc="honest plus characters m2=1,3 with equal weights vs modified"))
    c.append(_case("conjecture-modified-holomorphy", _modified_vanishing_probe, "open-statements", tags=ex, n=20,
                   box=SampleBox(re_z=(0.0, 0.0), im_z=(0.0, 0.0),
                                 aux={"w": [(3, 0), (3, 1), (4, 0), (5, 1)], "n": [-1, 0, 1], "k": [-1, 0, 1]}),
                   desc="modified minus numerator at the zeros of ϑ11"))
    return tuple(c)


def builtin_corpus() -> list[IdentityCase]:
    """All built-in cases, sorted by id."""
    return sorted(_build(), key=lambda case: case.id)


def corpus_ids() -> list[str]:
    return [case.id for case in builtin_corpus()]


def get_case(case_id: str) -> IdentityCase:
    for case in _build():
        if case.id == case_id:
            return case
    raise KeyError(f"no case with id {case_id!r}")


__all__ = ["TOPICS", "builtin_corpus", "corpus_ids", "get_case", "fit_theta_square_coefficients"]
