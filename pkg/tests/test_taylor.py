import pytest
from hypothesis import given, settings, strategies as st

from conftest import abcd, mono
from utils.algebra.errors import ExponentOverflowError, IdealDomainError, ResourceCapError
from utils.algebra.ideals import parse_ideal
from utils.algebra.monomials import Monomial, lcm_all
from utils.algebra.taylor import (
    build_scarf,
    build_taylor,
    cancel_minimize,
    check_face_bijection,
    contract_sequence,
    differential_squares_to_zero,
    face_map_f,
    facet_sign,
    mask_of,
    members_of,
)

# canonical positions in the seven-generator ideal
BCD, B2D, AC2, ABC, A2C, C3D, A3B2 = range(7)


def test_bitmask_helpers():
    assert members_of(0b1011) == (0, 1, 3)
    assert mask_of((0, 1, 3)) == 0b1011
    assert members_of(0) == ()
    assert [facet_sign(0b111, b) for b in range(3)] == [1, -1, 1]


def test_boundary_of_an_edge():
    T = build_taylor([mono("a*b"), mono("b*c")])
    assert T.mdeg(0b11) == mono("a*b*c")
    assert T.boundary(0b11) == [(0b10, 1, mono("a")), (0b01, -1, mono("c"))]
    assert T.entry(0b11, 0b10) == (1, mono("a"))
    assert T.entry(0b11, 0b00) is None
    assert T.entry(0b01, 0b10) is None


def test_faces_are_grouped(seven):
    T = build_taylor(seven.generators)
    assert T.size == 128
    assert len(T.faces_by_hdeg[0]) == 1 and len(T.faces_by_hdeg[7]) == 1
    assert sum(len(v) for v in T.faces_by_hdeg.values()) == 128
    top = T.faces_with_mdeg(mono("a^3*b^2*c^3*d"))
    assert all(f.mdeg == mono("a^3*b^2*c^3*d") for f in top)
    assert any(f.hdeg == 7 for f in top)


def test_differential_squares_to_zero(seven):
    assert differential_squares_to_zero(build_taylor(seven.generators))
    assert differential_squares_to_zero(build_taylor(abcd("a*b, b*c, a*c").generators))


gen_lists = st.lists(
    st.lists(st.integers(0, 3), min_size=3, max_size=3).map(Monomial.of),
    min_size=1,
    max_size=5,
)


@settings(max_examples=50)
@given(gen_lists)
def test_multidegree_table_is_subset_lcm(gens):
    T = build_taylor(gens)
    for mask in range(T.size):
        assert T.mdeg(mask) == lcm_all((gens[b] for b in members_of(mask)), 3)
        assert int(T.hdegs[mask]) == len(members_of(mask))


def test_face_cap():
    gens = [Monomial.of([i, 21 - i]) for i in range(21)]
    with pytest.raises(ResourceCapError):
        build_taylor(gens)
    assert build_taylor(gens[:3], cap=3).q == 3


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        build_taylor([Monomial.of([2**62, 0])])


def test_empty_sequence_needs_a_dimension():
    with pytest.raises(IdealDomainError):
        build_taylor([])
    assert build_taylor([], n=2).size == 1


# ---------------- Scarf ----------------

def test_scarf_of_triangle_is_vertices_only():
    T = build_taylor(abcd("a*b, b*c, a*c").generators)
    faces = build_scarf(T)
    assert [f.hdeg for f in faces] == [0, 1, 1, 1]


def test_scarf_of_generic_ideal_is_everything():
    M = parse_ideal("x^2, y^2, z^2")
    faces = build_scarf(build_taylor(M.generators))
    assert len(faces) == 8
    assert faces[-1].mdeg == Monomial.of([2, 2, 2])


# ---------------- contract face map ----------------

def test_contract_sequence_keeps_order(seven):
    out = contract_sequence(seven.generators, (A3B2,), (BCD, B2D, AC2, ABC, A2C, C3D))
    assert out == [mono(t) for t in ("c*d", "d", "c^2", "c", "c", "c^3*d")]


def test_face_map_multiplies_multidegrees(seven):
    T = build_taylor(seven.generators)
    R, H = (A3B2,), (BCD, B2D, AC2, ABC, A2C, C3D)
    local = build_taylor(contract_sequence(seven.generators, R, H), n=4)
    image = face_map_f(R, local.face(mask_of([3])), H, T)
    assert image.indices == (ABC, A3B2)
    assert image.mdeg == mono("a^3*b^2") * local.mdeg(mask_of([3]))
    assert face_map_f(R, 0, H, T).indices == (A3B2,)


def test_face_map_rejects_overlap(seven):
    T = build_taylor(seven.generators)
    with pytest.raises(IdealDomainError):
        face_map_f((A3B2,), 0b1, (A3B2, BCD), T)
    with pytest.raises(IdealDomainError):
        face_map_f((A3B2,), 0b100, (BCD, B2D), T)


def test_bijection_holds_for_dominant_parts(seven):
    T = build_taylor(seven.generators)
    assert check_face_bijection(T, (C3D, A3B2), (BCD, B2D, AC2, ABC, A2C)).ok
    assert check_face_bijection(T, (A3B2,), (BCD, B2D, AC2, ABC, A2C, C3D)).ok


@pytest.mark.parametrize("R, H", [((0,), range(1, 7)), ((1,), range(2, 7)), ((0, 1), range(2, 7))])
def test_face_map_carries_differentials_with_sign(seven, R, H):
    # dominant generators first: a^3*b^2, c^3*d, then the nondominant part
    gens = [seven.generators[i] for i in (A3B2, C3D, BCD, B2D, AC2, ABC, A2C)]
    T = build_taylor(gens, n=4)
    H = list(H)
    contract = build_taylor(contract_sequence(gens, R, H), n=4)
    assert check_face_bijection(T, R, H).ok
    for local in range(1, contract.size):
        image = face_map_f(R, local, H, T).members
        for bit in members_of(local):
            sub = local ^ (1 << bit)
            sign_c, mono_c = contract.entry(local, sub)
            sign_t, mono_t = T.entry(image, face_map_f(R, sub, H, T).members)
            assert sign_t == (-1) ** len(R) * sign_c
            assert mono_t == mono_c


def test_bijection_fails_for_a_nondominant_split():
    T = build_taylor(abcd("a*b, b*c, a*c").generators)
    result = check_face_bijection(T, (0,), (1, 2))
    assert not result.ok
    assert result.mismatches


# ---------------- cancellation ----------------

def test_cancellation_minimizes_a_redundant_sequence():
    gens = [mono(t) for t in ("c^2", "c", "d", "c", "c*d")]
    basis = cancel_minimize(build_taylor(gens))
    assert dict(basis.entries) == {
        (0, mono("1")): 1,
        (1, mono("c")): 1,
        (1, mono("d")): 1,
        (2, mono("c*d")): 1,
    }
    assert basis.cancellations == (32 - 4) // 2


def test_dominant_taylor_complex_is_already_minimal():
    M = parse_ideal("a^2*b, a*b^3*c, b*c^2")
    T = build_taylor(M.generators)
    basis = cancel_minimize(T)
    assert basis.cancellations == 0
    assert len(basis.survivors) == T.size
    assert basis.is_subcomplex_of(T)


def test_cancellation_order_does_not_change_the_numbers(seven, F2):
    T = build_taylor(seven.generators)
    default = cancel_minimize(T)
    shuffled = cancel_minimize(T, order_seed=3)
    assert default.entries == shuffled.entries
    assert cancel_minimize(T, F2).entries == default.entries
    assert sum(default.entries.values()) == 20
