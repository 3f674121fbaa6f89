from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ABCD, PROJECTIVE_PLANE, SEVEN_GENERATORS_BETTI, abcd, mono
from utils.algebra.errors import FieldSpecError
from utils.algebra.fields import FieldSpec
from utils.algebra.ideals import MonomialIdeal, ideal_from_exponents, parse_ideal
from utils.algebra.monomials import Monomial, VariableSet
from utils.algebra.homology import (
    BettiTable,
    betti_of_sequence,
    betti_oracle,
    face_counts,
    lcm_lattice,
    rank,
    shifted_lookup,
    strand,
)
from utils.algebra.taylor import build_taylor


TRIANGLE = "a*b, b*c, a*c"


# ---------------- fields ----------------

def test_field_text_forms():
    assert str(FieldSpec.parse("Q")) == "Q"
    assert str(FieldSpec.parse("Fp:7")) == "Fp:7"
    assert FieldSpec.parse("Fp:2") == FieldSpec.prime(2)


@pytest.mark.parametrize("text", ["", "R", "Fp:", "Fp:4", "Fp:x", "Fp:1"])
def test_bad_fields(text):
    with pytest.raises(FieldSpecError):
        FieldSpec.parse(text)


def test_rank_depends_on_the_field(Q, F2):
    rows = {0: {0: 1, 1: 1}, 1: {0: 1, 1: -1}}
    assert rank(rows, (2, 2), Q) == 2
    assert rank(rows, (2, 2), F2) == 1
    assert rank({}, (0, 3), Q) == 0


# ---------------- oracle examples ----------------

def test_triangle(Q):
    table = betti_oracle(abcd(TRIANGLE), Q)
    assert table.totals == [1, 3, 2]
    assert table.get(2, mono("a*b*c")) == 2
    assert table.get(3, mono("a*b*c")) == 0
    assert table.pd == 2


def test_complete_intersection():
    table = betti_oracle(parse_ideal("x^2, y^2, z^2"))
    assert table.totals == [1, 3, 3, 1]
    assert table.get(3, Monomial.of([2, 2, 2])) == 1


def test_artinian_in_two_variables():
    table = betti_oracle(parse_ideal("x^2, y^3, x*y"))
    assert table.totals == [1, 3, 2]


def test_seven_generators(seven):
    table = betti_oracle(seven)
    expected = {(i, mono(text)): 1 for i, text in SEVEN_GENERATORS_BETTI}
    assert dict(table.entries) == expected
    assert table.totals == [1, 7, 9, 3]


def test_projective_plane_depends_on_characteristic(Q, F2):
    M = parse_ideal(PROJECTIVE_PLANE)
    over_q = betti_oracle(M, Q)
    over_f2 = betti_oracle(M, F2)
    assert not over_q.same_numbers(over_f2)
    assert sum(over_f2.totals) == sum(over_q.totals) + 2
    top = Monomial.of([1] * 6)
    assert over_f2.total_at(top) == over_q.total_at(top) + 2


def test_zero_and_unit_ideals():
    zero = betti_oracle(MonomialIdeal(ABCD, ()))
    assert dict(zero.entries) == {(0, Monomial.unit(4)): 1}
    assert zero.pd == 0
    unit = betti_oracle(parse_ideal("1"))
    assert unit.entries == {}
    assert unit.pd == -1
    assert unit.totals == []


def test_non_minimal_sequence_gives_the_same_table():
    gens = [mono(t) for t in ("c^2", "c", "d", "c", "c*d")]
    table = betti_of_sequence(gens, 4)
    assert dict(table.entries) == {
        (0, mono("1")): 1,
        (1, mono("c")): 1,
        (1, mono("d")): 1,
        (2, mono("c*d")): 1,
    }
    assert table.same_numbers(betti_oracle(abcd("c, d")))


# ---------------- strands and lattice ----------------

def test_top_strand_of_triangle(Q):
    T = build_taylor(abcd(TRIANGLE).generators)
    s = strand(T, mono("a*b*c"))
    assert {i: len(faces) for i, faces in s.basis.items()} == {2: 3, 3: 1}
    assert s.composes_to_zero(Q)
    assert s.betti(Q) == {2: 2}


def test_lcm_lattice_and_face_counts():
    M = abcd(TRIANGLE)
    assert lcm_lattice(M) == {mono(t) for t in ("1", "a*b", "b*c", "a*c", "a*b*c")}
    counts = face_counts(build_taylor(M.generators))
    assert counts[(2, mono("a*b*c"))] == 3
    assert counts[(3, mono("a*b*c"))] == 1


def test_shifted_lookup():
    table = betti_oracle(abcd(TRIANGLE))
    assert shifted_lookup(table, 3, mono("a*b*c*d"), 1, mono("d")) == 2
    assert shifted_lookup(table, 0, mono("a*b*c*d"), 1, mono("d")) == 0
    assert shifted_lookup(table, 3, mono("a*b*c"), 1, mono("d")) == 0


def test_frames():
    table = betti_oracle(abcd(TRIANGLE))
    df = table.to_frame(ABCD)
    assert list(df.columns) == ["hdeg", "mdeg", "degree", "count"]
    assert df["count"].sum() == 6
    diagram = table.totals_frame()
    assert diagram.loc[2, 1] == 3
    assert diagram.loc[3, 2] == 2
    assert BettiTable.from_counter({}, FieldSpec.rationals(), 4).totals_frame().empty


def test_from_counter_drops_zeros():
    table = BettiTable.from_counter(Counter({(0, mono("1")): 1, (1, mono("a")): 0}), FieldSpec.rationals(), 4)
    assert table.items() == [(0, mono("1"), 1)]


# ---------------- properties ----------------

rows = st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=5)
XYZ = VariableSet.of("xyz")


@settings(max_examples=40, deadline=None)
@given(rows)
def test_alternating_sums_match_face_counts(data):
    M = ideal_from_exponents(data, XYZ)
    if not M.is_proper:
        return
    table = betti_oracle(M)
    faces = face_counts(build_taylor(M.generators))
    for l in lcm_lattice(M):
        betti_sum = sum((-1) ** i * table.get(i, l) for i in range(M.q + 1))
        face_sum = sum((-1) ** i * c for (i, m), c in faces.items() if m == l)
        assert betti_sum == face_sum


@settings(max_examples=40, deadline=None)
@given(rows)
def test_table_basics(data):
    M = ideal_from_exponents(data, XYZ)
    if not M.is_proper:
        return
    table = betti_oracle(M)
    assert table.totals[0] == 1
    assert table.totals[1] == M.q
    assert table.pd <= len(XYZ)
    assert table.multidegrees() <= lcm_lattice(M)
