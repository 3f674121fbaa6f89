# ---------------- utils/algebra/monomials.py ----------------
"""
Monomial arithmetic on exponent vectors.

Overview for future devs:
- VariableSet fixes the variable names and their order. The order is the
  order of first appearance in the input and never changes afterwards; it
  drives exponent-vector indexing and canonical printing.
- Monomial is just the exponent vector. It does not carry its VariableSet,
  so every binary operation checks that both sides have the same length and
  raises DimensionMismatchError otherwise.
- Exponents are Python ints (unbounded). The numpy multidegree table in
  utils.algebra.taylor is the only place that narrows them, and it checks.

Everything here is immutable and pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from utils.algebra.errors import DimensionMismatchError, NotDivisibleError

IDENT_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


# =============================================================================
# Variable sets
# =============================================================================

@dataclass(frozen=True)
class VariableSet:
    """Ordered, duplicate-free tuple of variable names (n >= 1)."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise DimensionMismatchError("A variable set needs at least one variable (n = 0 is rejected).")
        seen = set()
        for name in self.names:
            if not isinstance(name, str) or not IDENT_RE.match(name):
                raise ValueError(f"Invalid variable name: {name!r}")
            if name in seen:
                raise ValueError(f"Duplicate variable name: {name!r}")
            seen.add(name)

    @classmethod
    def of(cls, names: Iterable[str]) -> "VariableSet":
        return cls(tuple(names))

    @classmethod
    def indexed(cls, n: int, prefix: str = "x") -> "VariableSet":
        """x1..xn style names, used by the random generators."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"Unknown variable {name!r}; known: {', '.join(self.names)}") from None


# =============================================================================
# Monomials
# =============================================================================

@dataclass(frozen=True, order=True)
class Monomial:
    """
    Exponent vector over an ambient VariableSet.

    The all-zero vector is the unit monomial 1.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        for e in self.exponents:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError(f"Exponents must be nonnegative integers, got {self.exponents!r}")

    @classmethod
    def of(cls, exponents: Iterable[int]) -> "Monomial":
        return cls(tuple(int(e) for e in exponents))

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, index: int, power: int = 1) -> "Monomial":
        exps = [0] * n
        exps[index] = power
        return cls(tuple(exps))

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def sort_key(self) -> tuple:
        """Canonical order: total degree first, then the exponent vector."""
        return (self.degree, self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return multiply(self, other)


def _check_same(a: Monomial, b: Monomial) -> None:
    if len(a.exponents) != len(b.exponents):
        raise DimensionMismatchError(
            f"Monomials over different variable counts: {len(a.exponents)} vs {len(b.exponents)}"
        )


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise max."""
    _check_same(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def lcm_all(monomials: Iterable[Monomial], n: int) -> Monomial:
    """lcm of any number of monomials; the empty lcm is 1."""
    out = [0] * n
    for m in monomials:
        if len(m.exponents) != n:
            raise DimensionMismatchError(f"Expected {n} exponents, got {len(m.exponents)}")
        for i, e in enumerate(m.exponents):
            if e > out[i]:
                out[i] = e
    return Monomial(tuple(out))


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    _check_same(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, defined only when b | a."""
    _check_same(a, b)
    if not all(y <= x for x, y in zip(a.exponents, b.exponents)):
        raise NotDivisibleError(f"{b.exponents} does not divide {a.exponents}")
    return Monomial(tuple(x - y for x, y in zip(a.exponents, b.exponents)))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return Monomial(tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def support(a: Monomial) -> frozenset[int]:
    """Indices of the variables with positive exponent."""
    return frozenset(i for i, e in enumerate(a.exponents) if e > 0)

