from collections import Counter

import pytest

from conftest import abcd
from utils.algebra.errors import IdealDomainError
from utils.algebra.ideals import classify, is_almost_generic, is_artinian, parse_ideal
from utils.conjecture_fuzz import (
    CONJECTURES,
    CONJECTURE_STATEMENTS,
    FuzzParams,
    artinian_suite,
    c1_hypothesis,
    c2_hypothesis,
    c3_hypothesis,
    conjecture_fuzz,
    conjecture_instance,
    decomposition_suite,
    dominant_suite,
    pd_criteria_suite,
    random_batch,
    random_ideal,
    semidominant_suite,
    structural_suite,
)


# ---------------- random ideals ----------------

def test_random_ideals_are_reproducible():
    params = FuzzParams(vars=4, gens=6, max_exp=3)
    assert random_ideal(11, params) == random_ideal(11, params)
    batch = random_batch(5, 40, params)
    assert [s for s, _ in batch] == [40, 41, 42, 43, 44]
    assert batch[2][1] == random_ideal(42, params)


def test_random_ideals_respect_bounds():
    params = FuzzParams(vars=3, gens=4, max_exp=2)
    for _, M in random_batch(20, 0, params):
        assert M.is_proper
        assert 2 <= M.n <= 3
        assert M.q <= 4
        assert all(e <= 2 for g in M.generators for e in g.exponents)


def test_unconstrained_batches_spread_over_sizes_and_classes():
    batch = [M for _, M in random_batch(100, 0, FuzzParams(vars=5, gens=6, max_exp=4))]
    qs = Counter(M.q for M in batch)
    ps = Counter(classify(M).p for M in batch)
    assert min(qs) >= 2
    assert qs[6] > 0
    assert len(qs) >= 4
    assert ps[0] < 50
    assert len(ps) >= 4


def test_squarefree_batches_reach_the_requested_size():
    batch = [M for _, M in random_batch(30, 0, FuzzParams(vars=4, gens=4, max_exp=1))]
    assert all(set(g.exponents) <= {0, 1} for M in batch for g in M.generators)
    assert any(M.q == 4 for M in batch)


@pytest.mark.parametrize(
    "params, predicate",
    [
        (FuzzParams(vars=3, gens=5, artinian=True), lambda M: is_artinian(M)[0]),
        (FuzzParams(vars=4, gens=4, dominant=True), lambda M: classify(M).is_dominant),
        (FuzzParams(vars=4, gens=6, almost_generic=True), lambda M: is_almost_generic(M)[0]),
        (FuzzParams(vars=4, gens=6, max_exp=3, semidominant=2), lambda M: classify(M).p == 2),
    ],
)
def test_constraints_are_met(params, predicate):
    for _, M in random_batch(10, 100, params):
        assert predicate(M)


@pytest.mark.parametrize(
    "kwargs",
    [dict(vars=0), dict(gens=0), dict(max_exp=0), dict(gens=3, semidominant=4), dict(vars=5, gens=3, artinian=True)],
)
def test_bad_params(kwargs):
    with pytest.raises(IdealDomainError):
        FuzzParams(**kwargs)


def test_impossible_constraint_gives_up():
    params = FuzzParams(vars=1, gens=3, semidominant=3, retries=20)
    with pytest.raises(IdealDomainError):
        random_ideal(0, params)


# ---------------- conjecture hypotheses ----------------

def test_c1_hypothesis():
    assert c1_hypothesis(parse_ideal("x^2*y*z, x^2*y^3, x*y*z^2"))
    assert not c1_hypothesis(abcd("a*b, b*c, a*c"))
    assert not c1_hypothesis(parse_ideal("1"))


def test_c2_needs_a_nondominant_generator():
    assert not c2_hypothesis(parse_ideal("a^2*b, a*b^3*c, b*c^2"))
    assert not c2_hypothesis(parse_ideal("1"))


def test_c3_hypothesis():
    assert c3_hypothesis(abcd("a*b, b*c, a*c"))
    assert not c3_hypothesis(parse_ideal("x^2, y^2, z^2"))
    assert not c3_hypothesis(parse_ideal("x^2"))


@pytest.mark.parametrize("which", CONJECTURES)
def test_instances_satisfy_their_hypothesis(which):
    hypothesis = {"C1": c1_hypothesis, "C2": c2_hypothesis, "C3": c3_hypothesis}[which]
    params = FuzzParams(vars=4, gens=5, max_exp=3)
    for seed in range(5):
        M = conjecture_instance(which, seed, params)
        assert hypothesis(M)
        assert M == conjecture_instance(which, seed, params)


def test_every_conjecture_has_a_statement():
    assert set(CONJECTURE_STATEMENTS) == set(CONJECTURES)
    assert CONJECTURE_STATEMENTS["C1"].endswith("=>  characteristic Betti numbers")
    assert "minimal homological degrees" in CONJECTURE_STATEMENTS["C2"]
    assert CONJECTURE_STATEMENTS["C3"].endswith("pd = 2")


# ---------------- fuzzing ----------------

def test_empty_budget():
    report = conjecture_fuzz("C3", budget=0)
    assert report.tested == 0
    assert report.counterexamples == []
    assert report.summary == "C3: no counterexample in budget (0 tested)"


def test_unknown_conjecture():
    with pytest.raises(ValueError):
        conjecture_fuzz("C9", budget=1)


@pytest.mark.parametrize("which", CONJECTURES)
def test_fuzzing_is_deterministic(which):
    params = FuzzParams(vars=3, gens=4, max_exp=3)
    first = conjecture_fuzz(which, params, budget=4, seed=5)
    second = conjecture_fuzz(which, params, budget=4, seed=5)
    assert first.tested + len(first.skipped) == 4
    assert [c.seed for c in first.counterexamples] == [c.seed for c in second.counterexamples]
    assert first.method_mismatches == []


# ---------------- suites ----------------

@pytest.mark.parametrize(
    "suite, count",
    [
        (dominant_suite, 5),
        (artinian_suite, 3),
        (semidominant_suite, 3),
        (pd_criteria_suite, 5),
        (decomposition_suite, 3),
        (structural_suite, 10),
    ],
)
def test_small_suites_pass(suite, count):
    result = suite(count, seed=0)
    assert result.tested >= count
    assert result.ok, result.failures
