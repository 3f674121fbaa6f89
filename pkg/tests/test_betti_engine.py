from collections import Counter

import pytest

from conftest import ABCD, ABCDEFG, PD_FAMILY, PROJECTIVE_PLANE, SEVEN_GENERATORS_BETTI, abcd, mono
from utils.algebra.errors import IdealDomainError, ResourceCapError
from utils.algebra.fields import FieldSpec
from utils.algebra.homology import BettiTable, betti_oracle
from utils.algebra.ideals import MonomialIdeal, parse_ideal
from utils.algebra.monomials import Monomial, support
from utils.betti_engine import (
    METHODS,
    MethodComparison,
    artinian_check,
    betti,
    betti_by_cancellation,
    betti_dominant,
    charalambous_check,
    characteristic_check,
    full_support_witness,
    is_scarf,
    min_hdeg_check,
    no_nondominant_part_check,
    pd,
    pd2_check,
    pdn_check,
    verify_methods,
)
from utils.diagnostics import build_narrative

TRIANGLE = "a*b, b*c, a*c"
PDN_EXAMPLE = "x1^3, x1*x2, x1*x3, x1*x4, x1*x5, x2*x4, x3*x5"


@pytest.mark.parametrize("method", METHODS)
def test_seven_generators_by_every_method(seven, method):
    table = betti(seven, method)
    assert dict(table.entries) == {(i, mono(text)): 1 for i, text in SEVEN_GENERATORS_BETTI}


@pytest.mark.parametrize("method", METHODS)
def test_triangle_by_every_method(method):
    table = betti(abcd(TRIANGLE), method)
    assert table.totals == [1, 3, 2]


def test_unknown_method(seven):
    with pytest.raises(ValueError):
        betti(seven, "guess")


def test_trivial_tables():
    assert betti(parse_ideal("1")).entries == {}
    zero = betti(MonomialIdeal(ABCD, ()))
    assert dict(zero.entries) == {(0, Monomial.unit(4)): 1}


def test_dominant_tables_are_face_counts():
    M = parse_ideal("a^2*b, a*b^3*c, b*c^2")
    table = betti_dominant(M)
    assert table.totals == [1, 3, 3, 1]
    assert table.same_numbers(betti_oracle(M))
    with pytest.raises(IdealDomainError):
        betti_dominant(abcd(TRIANGLE))


def test_projective_plane_methods_agree_over_each_field(Q, F2):
    M = parse_ideal(PROJECTIVE_PLANE)
    assert verify_methods(M, F2, methods=("decompose", "oracle")).agree
    assert not betti(M, "decompose", Q).same_numbers(betti(M, "decompose", F2))


def test_methods_agree_over_a_large_prime(seven, Q):
    F = FieldSpec.prime(32003)
    assert verify_methods(seven, F).agree
    M = parse_ideal(PROJECTIVE_PLANE)
    assert betti(M, "oracle", F).same_numbers(betti(M, "oracle", Q))
    assert betti(M, "decompose", F).same_numbers(betti(M, "oracle", F))


def test_cancellation_reports_subcomplex(seven):
    outcome = betti_by_cancellation(seven)
    assert outcome.table.same_numbers(betti_oracle(seven))
    assert outcome.basis.cancellations == (128 - 20) // 2


# ---------------- pd ----------------

def test_pd_examples():
    assert pd(parse_ideal(PDN_EXAMPLE)) == 5
    assert pd(abcd(TRIANGLE)) == 2
    assert pd(MonomialIdeal(ABCD, ())) == 0
    with pytest.raises(IdealDomainError):
        pd(parse_ideal("1"))


@pytest.mark.parametrize("name, expected", [("dominant", 6), ("two_extra", 2), ("three_extra", 2)])
def test_pd_family(name, expected):
    M = parse_ideal(PD_FAMILY[name], ABCDEFG)
    assert pd(M) == expected
    assert pd(M, "oracle") == expected


# ---------------- characteristic ----------------

def test_seven_generators_are_characteristic(seven):
    report = characteristic_check(seven, betti(seven))
    assert report.is_characteristic
    assert report.min_hdeg_ok
    assert report.f_values[mono("a^3*b^2*c^3*d")] == 2


def test_another_characteristic_ideal():
    M = abcd("a^2*b*c, b^2*c^2, a^2*b^2, a*b*c^2")
    assert characteristic_check(M, betti(M, "oracle")).is_characteristic


def test_triangle_is_not_characteristic():
    M = abcd(TRIANGLE)
    report = characteristic_check(M, betti(M))
    assert not report.is_characteristic
    assert mono("a*b*c") in report.violations
    assert mono("a*b*c") not in report.L


def test_characteristic_needs_a_proper_ideal(Q):
    with pytest.raises(IdealDomainError):
        characteristic_check(parse_ideal("1"), BettiTable.from_counter({}, Q, 1))


# ---------------- Artinian ----------------

def test_artinian_bounds():
    M = parse_ideal("x^2, y^3, x*y")
    table = betti(M)
    assert charalambous_check(M, table)
    witness = full_support_witness(M, table)
    assert support(witness) == {0, 1}
    M3 = parse_ideal("x^2, y^2, z^2")
    assert full_support_witness(M3, betti(M3)) == Monomial.of([2, 2, 2])


def test_artinian_checks_refuse_other_ideals():
    M = abcd(TRIANGLE)
    with pytest.raises(IdealDomainError):
        charalambous_check(M, betti(M))
    with pytest.raises(IdealDomainError):
        full_support_witness(M, betti(M))


# ---------------- Scarf ----------------

def test_scarf_detection():
    assert is_scarf(parse_ideal("x^2, y^2, z^2"))
    assert not is_scarf(abcd(TRIANGLE))
    assert is_scarf(parse_ideal("a^2*b, a*b^3*c, b*c^2"))


# ---------------- theorem checks ----------------

def test_pd_checks():
    M = parse_ideal(PD_FAMILY["two_extra"], ABCDEFG)
    check = pd2_check(M, betti(M))
    assert check.applies and check.holds and not check.failed
    N = parse_ideal(PDN_EXAMPLE)
    check = pdn_check(N, betti(N))
    assert check.applies and check.holds
    assert "x1" in check.detail


def test_checks_that_do_not_apply():
    M = parse_ideal("x^2")
    check = pd2_check(M, betti(M))
    assert not check.applies and check.holds is None and not check.failed
    T = abcd(TRIANGLE)
    assert not artinian_check(T, betti(T)).applies
    assert not no_nondominant_part_check(T, betti(T)).applies


def test_artinian_check():
    M = parse_ideal("x^2, y^3, x*y")
    check = artinian_check(M, betti(M))
    assert check.applies and check.holds


def test_no_nondominant_part_check(seven):
    check = no_nondominant_part_check(seven, betti(seven))
    assert check.applies and check.holds


def test_min_hdeg_check_on_two_semidominant_ideal():
    M = abcd("a*c^2, a^2*c, b^2*d, a*b*c, b*c*d")
    check = min_hdeg_check(M, betti(M))
    assert check.applies and check.holds


def test_a_failing_check_is_flagged():
    M = parse_ideal("x^2, y^3, x*y")
    wrong = BettiTable.from_counter(Counter({(0, Monomial.unit(2)): 1, (1, Monomial.of([2, 0])): 1}), FieldSpec.rationals(), 2)
    check = artinian_check(M, wrong)
    assert check.failed
    assert "pd" in check.detail


# ---------------- verification ----------------

def test_methods_agree(seven, F2):
    cmp = verify_methods(seven, F2)
    assert cmp.agree
    assert set(cmp.tables) == set(METHODS)
    assert cmp.disagreements() == {}
    assert "agree" in build_narrative(cmp)


def test_narrative_points_at_the_drift(seven):
    good = betti(seven, "oracle")
    broken = Counter(dict(good.entries))
    broken[(2, mono("a*b*c*d"))] += 1
    cmp = MethodComparison(
        ideal=seven,
        field=good.field,
        tables={"oracle": good, "cancel": BettiTable.from_counter(broken, good.field, 4)},
    )
    assert not cmp.agree
    assert cmp.disagreements() == {"cancel": {(2, mono("a*b*c*d")): (2, 1)}}
    text = build_narrative(cmp)
    assert "beta_{2, a*b*c*d}: got 2, oracle 1" in text
    assert "cancellation" in text


def test_narrative_without_oracle(seven):
    good = betti(seven)
    cmp = MethodComparison(
        ideal=seven,
        field=good.field,
        tables={"decompose": good, "cancel": BettiTable.from_counter({}, good.field, 4)},
    )
    assert "Re-run with the oracle" in build_narrative(cmp)


# ---------------- face cap ----------------

FIVE_GENERATORS = "x1^5, x2^5, x3^5, x4^5, x1*x2*x3*x4"


@pytest.mark.parametrize("method", METHODS)
def test_face_cap_holds_for_every_method(method):
    M = parse_ideal(FIVE_GENERATORS)
    with pytest.raises(ResourceCapError):
        betti(M, method, cap=3)
    with pytest.raises(ResourceCapError):
        pd(M, method, cap=3)
    assert betti(M, method, cap=5).totals == betti(M, "oracle").totals


def test_trivial_ideals_ignore_the_cap():
    assert betti(parse_ideal("1"), cap=0).entries == {}
