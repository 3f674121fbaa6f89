import pytest

from utils.conjecture_fuzz import all_suites

FULL_SIZE = {
    "method agreement": 200 * 3,
    "dominant ideals": 100,
    "Artinian ideals": 100,
    "almost generic ideals": 100,
    "2-semidominant ideals": 100,
    "pd criteria": 100,
    "structural decompositions": 100,
    "structural invariants": 1000,
}


@pytest.mark.slow
def test_every_suite_passes_at_full_size():
    results = all_suites(seed=0, scale=1.0)
    assert {r.name: r.tested for r in results} == FULL_SIZE
    failures = [f for r in results for f in r.failures]
    assert failures == []
