import pytest

from utils.algebra.fields import FieldSpec
from utils.algebra.ideals import parse_ideal
from utils.algebra.monomials import VariableSet
from utils.algebra.schema import parse_monomial

ABCD = VariableSet.of("abcd")
ABCDEFG = VariableSet.of("abcdefg")

SEVEN_GENERATORS = "a^3*b^2, c^3*d, a*c^2, a^2*c, b^2*d, a*b*c, b*c*d"
SEVEN_GENERATORS_BETTI = [
    (3, "a^3*b^2*c*d"), (3, "a*b*c^3*d"), (3, "a^2*b*c^2"),
    (2, "a^3*b^2*c"), (2, "a^3*b^2*d"), (2, "a*c^3*d"), (2, "b*c^3*d"), (2, "a^2*c^2"),
    (2, "a*b*c^2"), (2, "a^2*b*c"), (2, "b^2*c*d"), (2, "a*b*c*d"),
    (1, "a^3*b^2"), (1, "c^3*d"), (1, "a*c^2"), (1, "a^2*c"), (1, "b^2*d"), (1, "a*b*c"), (1, "b*c*d"),
    (0, "1"),
]

PROJECTIVE_PLANE = "a*b*c, a*b*d, a*c*e, a*d*f, a*e*f, b*c*f, b*d*e, b*e*f, c*d*e, c*d*f"

_M = ["a^3*c^2*d^2*e^2*f^2*g^2", "a^2*b^3*d^2*e^2*f^2*g^2", "a^2*b^2*c^3*e^2*f^2*g^2",
      "a^2*b^2*c^2*d^3*f^2*g^2", "a^2*b^2*c^2*d*e^3*g^2", "b^2*c^2*d^2*e^2*g^3"]
_N = ["a*b*c*d*e*f*g", "a^2*b^2*c^2*d^2*e^2*f", "a^2*b^2*c^2*d^2*e*f^2"]
PD_FAMILY = {
    "dominant": ", ".join(_M),
    "two_extra": ", ".join(_M + _N[:2]),
    "three_extra": ", ".join(_M + _N),
}


def abcd(text: str):
    return parse_ideal(text, ABCD)


def mono(text: str, variables=ABCD):
    return parse_monomial(text, variables)


@pytest.fixture
def Q():
    return FieldSpec.rationals()


@pytest.fixture
def F2():
    return FieldSpec.prime(2)


@pytest.fixture
def seven():
    return abcd(SEVEN_GENERATORS)
