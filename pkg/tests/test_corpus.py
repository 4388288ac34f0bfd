import pytest

from mockchar.base import DEFAULT_PARAMS
from mockchar.corpus import TOPICS, builtin_corpus, corpus_ids, fit_theta_square_coefficients, get_case
from mockchar.harness import run_case, run_suite, select_cases

CASES = builtin_corpus()
BY_ID = {c.id: c for c in CASES}
CHECKED = [c for c in CASES if not c.exploratory]

# every statement family the harness must certify
EXPECTED_TOPICS = {
    "eta-laws", "theta-s-law", "theta-products", "theta-differences", "r-half-period",
    "appell-swap", "appell-conjugate", "appell-t-law", "lattice-shift", "s-shift-difference",
    "argument-doubling", "denominator-identity", "completion-s-independence", "completion-swap",
    "completion-s-law", "completion-t-law", "half-period-shift", "level-one-triviality",
    "a-tilde-alternative", "a-ring-specialisation", "a-tilde-laws", "a-ring-laws", "g-laws",
    "a-ring-g-relations", "m2-a-ring-laws", "twisted-numerators", "twisted-parity",
    "parity-dependence", "denominator-laws", "modular-closure", "m2-modular-closure",
    "m2-modified-closed-forms", "m2-honest-closed-forms", "m2-sum-rule", "m2-invariant-span",
    "correction-closed-forms", "half-level-closed-forms", "level-doubling", "m2-level-doubling",
    "m4-modified-closed-forms", "m4-honest-closed-forms", "m4-sum-rule", "pq-shift",
    "pq-doubling", "pq-closed-forms", "numerator-vanishing", "theta-asymptotics",
    "character-asymptotics", "theta-ratio",
}


@pytest.fixture(scope="module")
def full_run():
    return run_suite(CASES, "all", seed=1)


def test_ids_are_unique_and_sorted():
    ids = corpus_ids()
    assert len(ids) == len(set(ids)) == len(CASES)
    assert ids == sorted(ids)


def test_required_keys_present():
    for key in ("lemma-2.7-denominator", "prop-9.1-sum", "prop-9.1-diff"):
        assert get_case(key).id == key
    with pytest.raises(KeyError):
        get_case("no-such-case")


def test_every_topic_is_covered():
    assert set(TOPICS) == EXPECTED_TOPICS
    tags = {t for c in CASES for t in c.tags}
    assert EXPECTED_TOPICS <= tags


def test_case_invariants():
    for c in CASES:
        if c.kind == "sampled":
            assert c.n_samples >= 10 and c.sample_box.im_tau[0] >= 0.3
        assert 0 < c.tolerance <= 1e-4


def test_probes_are_exploratory():
    probes = select_cases(CASES, "conjecture-*")
    assert len(probes) >= 3
    assert all(c.exploratory for c in probes)


def test_full_corpus_passes(full_run):
    failing = [r.id for r in full_run.reports if not r.passed and not r.exploratory]
    assert failing == []
    assert full_run.status == 0
    assert sum(r.passed for r in full_run.reports) >= 40


def test_full_run_is_reproducible(full_run):
    again = run_suite(CASES, "m2-*", seed=1)
    first = {r.id: r for r in full_run.reports}
    for r in again.reports:
        assert r == first[r.id]


def test_filter_by_prefix():
    ids = [c.id for c in select_cases(CASES, "m2-*")]
    assert ids and all(i.startswith("m2-") for i in ids)


@pytest.mark.parametrize("case", CHECKED, ids=lambda c: c.id)
def test_case_detects_a_small_defect(case):
    eps = 10 * case.tolerance
    assert not run_case(case, rhs_scale=1 + eps).passed
    assert not run_case(case, lhs_scale=1 + eps).passed


def test_theta_square_fit_reproduces_its_own_samples():
    from mockchar.characters import CharacterId, Sector, WeightParams, character
    from mockchar.qseries import dedekind_eta, theta

    tau = 0.1 + 0.9j
    c1, c2 = fit_theta_square_coefficients(tau, DEFAULT_PARAMS)
    cid = CharacterId(WeightParams(4, 0), Sector.plus, modified=True)
    for z in (0.11 + 0.03j, 0.29 - 0.05j):
        lhs = dedekind_eta(tau / 2) * dedekind_eta(2 * tau) * character(cid, tau, z)
        assert abs(lhs - c1 * theta("01", tau, z) ** 2 - c2 * theta("10", tau, z) ** 2) < 1e-12 * (1 + abs(lhs))
