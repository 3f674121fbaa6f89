# ---------------- utils/algebra/decompose.py ----------------
"""
Structural decompositions of monomial ideals.

Overview for future devs:
- Split the minimal generators G of M into the dominant ones m_1..m_d (canonical
  order) and the rest H = h_1..h_c. For a subset of the m's with lcm m, the
  contract is M_m = (lcm(m, h_1)/m, ..., lcm(m, h_c)/m), re-minimalized.
- C = {(j, lcm of a j-subset of m_1..m_d) : j >= 1} u {(0, 1)}, kept as a set of
  pairs. Then
      beta_{k,l}(S/M) = sum over (j, m) in C of beta_{k-j, l/m}(S/M_m).
- first_decomposition uses every dominant generator (d = number of dominant
  generators, H = the nondominant ones). third_decomposition uses d = 1.
- second_decomposition keeps applying the first one until every leaf is
  dominant, purely nondominant or the unit ideal. The nondominant count drops
  by at least one per level, so the depth never exceeds the root's p.

Hard rules:
- c = 0 (nothing outside the chosen dominant part) gives C = {(0, 1)} and M_1 = M.
- Unit contracts contribute nothing but stay in the output for auditing.
- Ambient variables are kept even when a contract no longer uses them.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal, Sequence

from utils.algebra.errors import IdealDomainError, TheoremViolationError
from utils.algebra.fields import FieldSpec
from utils.algebra.homology import BettiTable, betti_oracle
from utils.algebra.ideals import MonomialIdeal, classify, minimalize
from utils.algebra.monomials import Monomial, lcm_all, multiply, quotient
from utils.algebra.taylor import DEFAULT_FACE_CAP, check_face_cap

LeafKind = Literal["dominant", "purely_nondominant", "unit", "internal"]


# =============================================================================
# Data model
# =============================================================================

@dataclass(frozen=True)
class ShiftedIdeal:
    """One term beta_{k-j, l/m}(S/ideal) of a decomposition."""

    j: int
    m: Monomial
    ideal: MonomialIdeal

    def sort_key(self) -> tuple:
        return (self.j, self.m.sort_key())


@dataclass(frozen=True)
class ShiftSet:
    """
    The index set C as canonical (j, m) pairs.

    collisions lists every (j, m) reached by two or more distinct j-subsets of
    the dominant part. Set semantics still count such a pair once.
    """

    pairs: tuple[tuple[int, Monomial], ...]
    dominant_part: tuple[int, ...]
    rest: tuple[int, ...]
    collisions: tuple[tuple[int, Monomial], ...] = ()

    def __iter__(self) -> Iterator[tuple[int, Monomial]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, item) -> bool:
        return item in self.pairs

    @property
    def has_collisions(self) -> bool:
        return bool(self.collisions)


@dataclass(frozen=True)
class DecompositionTree:
    """
    Node of a second structural decomposition.

    term carries the local (j, m) shift relative to the parent and the node's
    ideal; shift_j / shift_m are the accumulated shifts from the root.
    """

    term: ShiftedIdeal
    kind: LeafKind
    shift_j: int
    shift_m: Monomial
    children: tuple["DecompositionTree", ...] = field(default_factory=tuple)

    @property
    def ideal(self) -> MonomialIdeal:
        return self.term.ideal

    @property
    def is_leaf(self) -> bool:
        return self.kind != "internal"

    def leaves(self) -> Iterator["DecompositionTree"]:
        if self.is_leaf:
            yield self
            return
        for child in self.children:
            yield from child.leaves()

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(child.depth() for child in self.children)

    def kind_counts(self) -> Counter:
        return Counter(leaf.kind for leaf in self.leaves())


# =============================================================================
# C and contracts
# =============================================================================

def _split(M: MonomialIdeal, d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(indices of m_1..m_d, indices of H) for the first d dominant generators."""
    report = classify(M)
    dominant = report.dominant_indices()
    if not dominant:
        raise IdealDomainError(f"{M} is purely nondominant: there is no dominant part to split off")
    if not 1 <= d <= len(dominant):
        raise IdealDomainError(f"d must lie in 1..{len(dominant)} for {M}, got {d}")
    chosen = tuple(dominant[:d])
    rest = tuple(i for i in range(M.q) if i not in chosen)
    return chosen, rest


def _shift_set(M: MonomialIdeal, chosen: Sequence[int], rest: Sequence[int], cap: int = DEFAULT_FACE_CAP) -> ShiftSet:
    check_face_cap(len(chosen), cap)
    unit = M.unit_monomial()
    if not rest:
        return ShiftSet(pairs=((0, unit),), dominant_part=tuple(chosen), rest=())

    seen: dict[tuple[int, Monomial], int] = {}
    for j in range(1, len(chosen) + 1):
        for subset in combinations(chosen, j):
            key = (j, lcm_all((M.generators[i] for i in subset), M.n))
            seen[key] = seen.get(key, 0) + 1
    collisions = tuple(sorted((k for k, c in seen.items() if c > 1), key=lambda p: (p[0], p[1].sort_key())))
    if collisions:
        logging.warning(
            "Distinct dominant subsets share an lcm in %s: %s. Counting each (j, m) once.",
            M, [(j, m.exponents) for j, m in collisions],
        )
    pairs = sorted(seen, key=lambda p: (p[0], p[1].sort_key()))
    return ShiftSet(
        pairs=((0, unit), *pairs),
        dominant_part=tuple(chosen),
        rest=tuple(rest),
        collisions=collisions,
    )


def build_C(M: MonomialIdeal, d: int, cap: int = DEFAULT_FACE_CAP) -> ShiftSet:
    """Index set C for the first d dominant generators of M (2^d subsets, d held to cap)."""
    chosen, rest = _split(M, d)
    return _shift_set(M, chosen, rest, cap)


def contract(M: MonomialIdeal, m: Monomial, H: Sequence[int]) -> MonomialIdeal:
    """M_m = minimalize(lcm(m, h)/m for h in H), over the same variables."""
    if not H:
        raise IdealDomainError("contract needs a nonempty H")
    gens = [quotient(lcm_all((m, M.generators[h]), M.n), m) for h in H]
    return minimalize(gens, M.variables)


def _terms(M: MonomialIdeal, shifts: ShiftSet) -> list[ShiftedIdeal]:
    if not shifts.rest:
        return [ShiftedIdeal(j=0, m=M.unit_monomial(), ideal=M)]
    return [ShiftedIdeal(j=j, m=m, ideal=contract(M, m, shifts.rest)) for j, m in shifts]


# =============================================================================
# Decompositions
# =============================================================================

def first_decomposition(M: MonomialIdeal, cap: int = DEFAULT_FACE_CAP) -> list[ShiftedIdeal]:
    """
    One term per (j, m) in C with d = all dominant generators. Unit contracts
    are included. Raises IdealDomainError when M is purely nondominant and
    ResourceCapError when q exceeds cap.
    """
    check_face_cap(M.q, cap)
    report = classify(M)
    if report.is_purely_nondominant:
        raise IdealDomainError(f"{M} is purely nondominant and has no first structural decomposition")
    d = len(report.dominant_indices())
    shifts = build_C(M, d, cap)
    logging.debug("first_decomposition: %s dominant generators, %s terms", d, len(shifts))
    return _terms(M, shifts)


def third_decomposition(M: MonomialIdeal, pivot: int | None = None, cap: int = DEFAULT_FACE_CAP) -> list[ShiftedIdeal]:
    """
    d = 1 split on one dominant generator (the first one unless pivot names
    another dominant generator by index). Two terms, or one when q = 1.
    """
    check_face_cap(M.q, cap)
    report = classify(M)
    dominant = report.dominant_indices()
    if not dominant:
        raise IdealDomainError(f"{M} is purely nondominant: the third decomposition needs a dominant generator")
    if pivot is None:
        pivot = dominant[0]
    elif pivot not in dominant:
        raise IdealDomainError(f"Generator {pivot} of {M} is not dominant")
    rest = tuple(i for i in range(M.q) if i != pivot)
    return _terms(M, _shift_set(M, (pivot,), rest, cap))


def _node_kind(M: MonomialIdeal) -> LeafKind:
    if M.is_unit:
        return "unit"
    report = classify(M)
    if report.is_dominant:
        return "dominant"
    if report.is_purely_nondominant:
        return "purely_nondominant"
    return "internal"


def second_decomposition(
    M: MonomialIdeal,
    max_depth: int | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> DecompositionTree:
    """Recursive first decompositions down to dominant / purely nondominant / unit leaves."""
    if M.is_zero:
        raise IdealDomainError("The zero ideal has no structural decomposition")
    check_face_cap(M.q, cap)
    if max_depth is None:
        max_depth = 0 if M.is_unit else classify(M).p
    unit = M.unit_monomial()
    root = ShiftedIdeal(j=0, m=unit, ideal=M)
    return _grow(root, 0, unit, depth=0, max_depth=max_depth, cap=cap)


def _grow(
    term: ShiftedIdeal, shift_j: int, shift_m: Monomial, depth: int, max_depth: int, cap: int
) -> DecompositionTree:
    kind = _node_kind(term.ideal)
    if kind != "internal":
        return DecompositionTree(term=term, kind=kind, shift_j=shift_j, shift_m=shift_m)
    if depth >= max_depth:
        raise TheoremViolationError(
            f"Decomposition of {term.ideal} still has a nondominant part at depth {depth} (cap {max_depth})"
        )
    children = tuple(
        _grow(child, shift_j + child.j, multiply(shift_m, child.m), depth + 1, max_depth, cap)
        for child in sorted(first_decomposition(term.ideal, cap), key=ShiftedIdeal.sort_key)
    )
    return DecompositionTree(term=term, kind="internal", shift_j=shift_j, shift_m=shift_m, children=children)


def has_purely_nondominant_part(tree: DecompositionTree) -> bool:
    return any(leaf.kind == "purely_nondominant" for leaf in tree.leaves())


# =============================================================================
# Identity evaluator
# =============================================================================

@dataclass(frozen=True)
class DecompositionIdentity:
    """
    beta(S/M) rebuilt from a one-level decomposition with oracle tables.

    contributors[(k, l)] lists the (j, m) terms that put something at (k, l);
    unique_contributors is True when no entry had two.
    """

    table: BettiTable
    contributors: dict[tuple[int, Monomial], tuple[tuple[int, Monomial], ...]]

    @property
    def unique_contributors(self) -> bool:
        return all(len(v) <= 1 for v in self.contributors.values())


def decomposition_table(
    terms: Sequence[ShiftedIdeal],
    n: int,
    field: FieldSpec | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> DecompositionIdentity:
    field = field or FieldSpec.rationals()
    total: Counter = Counter()
    sources: dict[tuple[int, Monomial], list[tuple[int, Monomial]]] = defaultdict(list)
    for term in terms:
        if term.ideal.is_unit:
            continue
        shifted = betti_oracle(term.ideal, field, cap=cap).shifted(term.j, term.m)
        for key, c in shifted.items():
            total[key] += c
            sources[key].append((term.j, term.m))
    return DecompositionIdentity(
        table=BettiTable.from_counter(total, field, n),
        contributors={k: tuple(v) for k, v in sources.items()},
    )


def first_decomposition_table(
    M: MonomialIdeal,
    field: FieldSpec | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> DecompositionIdentity:
    """Sum of shifted oracle tables over the first decomposition of M."""
    return decomposition_table(first_decomposition(M, cap), M.n, field, cap)
