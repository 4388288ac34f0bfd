import cmath
import math

import pytest
from hypothesis import given, strategies as st

from conftest import close
from mockchar.base import PoleError, q_pow
from mockchar.characters import (
    CharacterId,
    Sector,
    WeightParams,
    a_ring,
    central_charge,
    character,
    doubling_relation,
    g_function,
    n3_denominator,
    numerator_vanishing_check,
    p_function,
    twist_vanishes,
    vanishing_scale,
)
from mockchar.closed_forms import closed_form_character, has_closed_form, p2_closed_form, pq4_closed_form
from mockchar.modular import CHARACTER_KEYS, closure_relation, m2_closure_relation, modified_character_id, modified_six
from mockchar.qseries import dedekind_eta
from strategies import taus, zs

SECTORS = list(Sector)


def test_character_id_parse_round_trip():
    cid = CharacterId.parse("m=2,m2=1,plus,honest")
    assert cid == CharacterId(WeightParams(2, 1), Sector.plus, False)
    assert CharacterId.parse(str(cid)) == cid
    assert CharacterId.parse("minus, modified, m2=0, m=4").sector is Sector.minus
    for bad in ("m=2,plus", "m=2,m2=3,plus", "m=2,m2=1,sideways", "k=1,m=2,m2=1,plus"):
        with pytest.raises(ValueError):
            CharacterId.parse(bad)


def test_identically_zero_modified_characters_need_opt_in():
    assert twist_vanishes(WeightParams(2, 0), Sector.twist_plus)
    with pytest.raises(ValueError):
        CharacterId(WeightParams(2, 0), Sector.twist_plus, modified=True)
    cid = CharacterId(WeightParams(2, 0), Sector.twist_plus, modified=True, allow_zero=True)
    assert character(cid, 0.9j, 0.1) == 0


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_central_charge_from_level(m):
    from fractions import Fraction

    assert central_charge(m) == -6 * WeightParams(m, 0).level - Fraction(7, 2)


M2_WITH_CLOSED_FORM = [
    c for c in (CharacterId(WeightParams(2, m2), s, mod, allow_zero=True)
                for m2 in range(3) for s in SECTORS for mod in (False, True))
    if has_closed_form(c)
]


@pytest.mark.parametrize("cid", M2_WITH_CLOSED_FORM, ids=str)
def test_m2_series_matches_closed_form(cid):
    for tau, z in ((0.1 + 0.9j, 0.13 + 0.04j), (-0.3 + 1.2j, -0.27 + 0.1j)):
        assert close(character(cid, tau, z), closed_form_character(cid, tau, z), 1e-10)


@pytest.mark.parametrize("m2", [1, 3])
@pytest.mark.parametrize("sector", [Sector.plus, Sector.minus])
@pytest.mark.parametrize("modified", [False, True])
def test_m4_series_matches_closed_form(m2, sector, modified):
    cid = CharacterId(WeightParams(4, m2), sector, modified)
    assert has_closed_form(cid)
    tau, z = 0.2 + 0.8j, 0.11 - 0.05j
    assert close(character(cid, tau, z), closed_form_character(cid, tau, z), 1e-10)


def test_closed_form_rejects_unknown_characters():
    cid = CharacterId(WeightParams(3, 1), Sector.plus)
    assert not has_closed_form(cid)
    with pytest.raises(ValueError):
        closed_form_character(cid, 1j, 0.1)


def test_denominator_pole_is_reported():
    with pytest.raises(PoleError):
        character(CharacterId(WeightParams(2, 1), Sector.minus), 0.9j, 0.0)
    assert abs(n3_denominator("plus", 0.9j, 0.1)) > 0


@given(taus(), zs(), st.sampled_from(["S", "T"]), st.sampled_from(CHARACTER_KEYS), st.sampled_from([1, 2, 3]))
def test_general_modular_closure(tau, z, law, key, m):
    assert close(*closure_relation(law, key, m, tau, z), 1e-8)


@given(taus(), zs(), st.sampled_from(["S", "T"]), st.sampled_from(CHARACTER_KEYS))
def test_reduced_m2_closure(tau, z, law, key):
    assert close(*m2_closure_relation(law, key, tau, z), 1e-8)


def test_tp_s_law_needs_the_level_phase():
    # the law without the factor e^{-πim/2} fails for odd m
    tau, z, m = 0.1 + 0.9j, 0.12 + 0.03j, 1
    lhs, rhs = closure_relation("S", "tp", m, tau, z)
    b = modified_six(m, tau, z, keys=("m0", "m1"))
    bare = cmath.exp(1j * math.pi * m * z * z / (2 * tau)) * (b["m0"] - b["m1"])
    assert close(lhs, rhs, 1e-10)
    assert not close(lhs, bare, 1e-3)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("rel", range(1, 7))
def test_doubling_relations(rel, m):
    assert close(*doubling_relation(rel, m, 0.15 + 0.95j, 0.1 + 0.04j), 1e-9)


@pytest.mark.parametrize("rel,m", [(2, 1), (4, 1), (2, 3), (6, 1), (6, 2)])
def test_doubling_relations_in_printed_form_fail(rel, m):
    assert not close(*doubling_relation(rel, m, 0.15 + 0.95j, 0.1 + 0.04j, printed=True), 1e-3)


def test_p21_prefactor_is_q_to_one_eighth():
    tau, z = 0.1 + 0.9j, 0.13 + 0.05j
    val = p_function(2, 1, tau, z)
    g1 = g_function(1, "+", tau, z)
    assert close(val, -1j * q_pow(tau, 1 / 8) * g1, 1e-12)
    assert close(val, p2_closed_form(1, tau, z), 1e-12)
    assert not close(val, -1j * q_pow(tau, 1 / 4) * g1, 1e-3)


@pytest.mark.parametrize("which", ["P", "Q"])
@pytest.mark.parametrize("s", [1, 2])
def test_pq4_closed_forms(which, s):
    from mockchar.characters import q_function

    tau, z = -0.1 + 0.85j, 0.09 + 0.06j
    fn = p_function if which == "P" else q_function
    assert close(fn(4, s, tau, z), pq4_closed_form(which, s, tau, z), 1e-10)


def test_eta_s_law_power_is_minus_one_half():
    tau = 0.05 + 0.3j
    assert close(dedekind_eta(tau), dedekind_eta(-1 / tau) / cmath.sqrt(-1j * tau), 1e-12)
    assert not close(dedekind_eta(tau), dedekind_eta(-1 / tau) * cmath.sqrt(-1j * tau), 1e-3)


@pytest.mark.parametrize("m", [1, 2, 4])
def test_minus_numerator_vanishes_on_the_lattice(m):
    tau = 0.05 + 0.9j
    for m2 in range(m + 1):
        w = WeightParams(m, m2)
        for n in range(-2, 3):
            for pp in range(-2, 3):
                val = numerator_vanishing_check(w, n, pp, tau)
                assert abs(val) < 1e-9 * max(1.0, vanishing_scale(w, n, pp, tau))


def test_modified_character_keys():
    assert modified_character_id("tp", 2).weight.m2 == 1
    assert modified_character_id("tp", 3).weight.m2 == 0
    with pytest.raises(ValueError):
        modified_character_id("xx", 2)


def test_a_ring_index_is_checked():
    with pytest.raises(ValueError):
        a_ring(7, 2, 1j, 0.1)
