# ---------------- utils/algebra/ideals.py ----------------
"""
Monomial ideals: canonical generating sets, dominance, hypothesis detectors.

Overview for future devs:
- MonomialIdeal always holds its *minimal* generating set, sorted by
  (total degree, exponent vector). Build one through minimalize() or
  parse_ideal(); the constructor itself only checks shape.
- The unit ideal is (1); the zero ideal has no generators. Both are
  representable (they show up as contracts in decompositions) but the
  dominance/decomposition operations reject them.
- classify() decides dominance per generator. A generator is dominant when
  some variable appears in it with an exponent strictly larger than in every
  other generator; the witness is the first such variable in canonical order.
- The *_hypothesis detectors answer "does this ideal satisfy the hypothesis
  of the pd = 2 / pd = n criteria"; betti_engine checks the conclusions.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable, Sequence

from utils.algebra.errors import DimensionMismatchError, IdealDomainError, IdealParseError
from utils.algebra.monomials import Monomial, VariableSet, divides, lcm, support
from utils.algebra.schema import (
    ParsedGenerators,
    format_generators,
    format_ideal_text,
    generators_from_json,
    parse_generators,
)


# =============================================================================
# Data model
# =============================================================================

@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal, canonically sorted generating set over an ambient VariableSet."""

    variables: VariableSet
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        n = len(self.variables)
        for g in self.generators:
            if len(g) != n:
                raise DimensionMismatchError(f"Generator {g.exponents} does not have {n} exponents")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def q(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    def unit_monomial(self) -> Monomial:
        return Monomial.unit(self.n)

    def generators_text(self) -> str:
        """Plain generator list for display; drops zero exponents."""
        if self.is_zero:
            return "0"
        return format_generators(self.generators, self.variables)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return f"({format_ideal_text(self.generators, self.variables)})"


@dataclass(frozen=True)
class GeneratorDominance:
    is_dominant: bool
    witness_variable: int | None


@dataclass(frozen=True)
class DominanceReport:
    """
    Per-generator dominance plus the class of the ideal.

    class_label is 'dominant' (p = 0), 'purely nondominant' (p = q) or
    '<p>-semidominant' otherwise.
    """

    per_generator: tuple[GeneratorDominance, ...]
    p: int

    @property
    def q(self) -> int:
        return len(self.per_generator)

    @property
    def class_label(self) -> str:
        if self.p == 0:
            return "dominant"
        if self.p == self.q:
            return "purely nondominant"
        return f"{self.p}-semidominant"

    @property
    def is_dominant(self) -> bool:
        return self.p == 0

    @property
    def is_purely_nondominant(self) -> bool:
        return self.p == self.q

    def dominant_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.per_generator) if d.is_dominant]

    def nondominant_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.per_generator) if not d.is_dominant]


# =============================================================================
# Construction
# =============================================================================

def minimalize(gens: Iterable[Monomial], variables: VariableSet) -> MonomialIdeal:
    """
    Keep the divisibility-minimal elements, deduplicated and canonically sorted.

    Order-insensitive and idempotent. Empty input gives the zero ideal.
    """
    unique = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    # Sorted by degree, so anything that divides g is already in kept.
    for g in unique:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return MonomialIdeal(variables=variables, generators=tuple(kept))


def parse_ideal(text: str, variables: VariableSet | None = None) -> MonomialIdeal:
    """
    Parse ideal text into a canonical ideal.

    Logs a warning when the written generators were not a minimal generating set.
    """
    return _canonical(parse_generators(text, variables))


def _canonical(parsed: ParsedGenerators) -> MonomialIdeal:
    ideal = minimalize(parsed.generators, parsed.variables)
    if len(parsed.generators) != ideal.q:
        logging.warning(
            "Input generators were not minimal: %s given, %s kept -> %s",
            len(parsed.generators), ideal.q, ideal,
        )
    return ideal


def ideal_from_json(payload: dict[str, Any]) -> MonomialIdeal:
    """{"variables": [...], "generators": [[...], ...]} to a canonical ideal."""
    return _canonical(generators_from_json(payload))


def load_ideal(text: str) -> MonomialIdeal:
    """Ideal input in either form: a JSON object, or the text grammar."""
    if not text.lstrip().startswith("{"):
        return parse_ideal(text)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise IdealParseError(f"Malformed ideal JSON: {e.msg}", e.lineno, e.colno) from e
    return ideal_from_json(payload)


def ideal_from_exponents(rows: Sequence[Sequence[int]], variables: VariableSet) -> MonomialIdeal:
    return minimalize((Monomial.of(r) for r in rows), variables)


def _require_proper(M: MonomialIdeal, what: str) -> None:
    if M.is_zero:
        raise IdealDomainError(f"{what} is undefined for the zero ideal")
    if M.is_unit:
        raise IdealDomainError(f"{what} is undefined for the unit ideal")


# =============================================================================
# Dominance
# =============================================================================

def _dominance_witness(gens: Sequence[Monomial], i: int, n: int) -> int | None:
    g = gens[i]
    for v in range(n):
        e = g.exponents[v]
        if e == 0:
            continue
        if all(e > h.exponents[v] for k, h in enumerate(gens) if k != i):
            return v
    return None


def classify(M: MonomialIdeal) -> DominanceReport:
    _require_proper(M, "Dominance classification")
    per = []
    for i in range(M.q):
        w = _dominance_witness(M.generators, i, M.n)
        per.append(GeneratorDominance(is_dominant=w is not None, witness_variable=w))
    p = sum(1 for d in per if not d.is_dominant)
    return DominanceReport(per_generator=tuple(per), p=p)


def nondominant_part(M: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by the nondominant generators of M (zero ideal if none)."""
    report = classify(M)
    return minimalize((M.generators[i] for i in report.nondominant_indices()), M.variables)


# =============================================================================
# Hypothesis detectors
# =============================================================================

def is_artinian(M: MonomialIdeal) -> tuple[bool, tuple[int | None, ...]]:
    """(True, indices) iff every variable has a pure-power generator."""
    found: list[int | None] = [None] * M.n
    for idx, g in enumerate(M.generators):
        supp = support(g)
        if len(supp) == 1:
            v = next(iter(supp))
            if found[v] is None:
                found[v] = idx
    return all(f is not None for f in found), tuple(found)


def shared_exponent_variables(M: MonomialIdeal) -> list[int]:
    """Variables whose same nonzero exponent occurs in two distinct generators."""
    shared = []
    for v in range(M.n):
        seen: set[int] = set()
        for g in M.generators:
            e = g.exponents[v]
            if e == 0:
                continue
            if e in seen:
                shared.append(v)
                break
            seen.add(e)
    return shared


def is_almost_generic(M: MonomialIdeal) -> tuple[bool, int | None]:
    """
    Some variable x_i may be exempted; no other variable may repeat a nonzero
    exponent across two generators. Returns the smallest valid i.
    """
    shared = shared_exponent_variables(M)
    if not shared:
        return True, 0
    if len(shared) == 1:
        return True, shared[0]
    return False, None


def exempt_pair_generic(M: MonomialIdeal) -> tuple[int, int] | None:
    """
    Smallest (i, j), i < j, such that only x_i and x_j may repeat a nonzero
    exponent. This is the hypothesis of the two-exemption conjecture.
    """
    if M.n < 2:
        return None
    shared = shared_exponent_variables(M)
    if len(shared) > 2:
        return None
    pool = list(shared)
    for v in range(M.n):
        if len(pool) >= 2:
            break
        if v not in pool:
            pool.append(v)
    i, j = sorted(pool[:2])
    return i, j


def pair_lcm_divisor(M: MonomialIdeal) -> int | None:
    """Index of the first generator dividing lcm(g, h) for every pair g != h."""
    gens = M.generators
    pair_lcms = [lcm(a, b) for a, b in combinations(gens, 2)]
    for idx, g in enumerate(gens):
        if all(divides(g, l) for l in pair_lcms):
            return idx
    return None


def pd2_hypothesis(M: MonomialIdeal) -> bool:
    """M is 2- or 3-semidominant and some generator divides every pairwise lcm."""
    if M.q < 2:
        raise IdealDomainError("The pd = 2 criterion needs at least two minimal generators")
    report = classify(M)
    if report.p not in (2, 3):
        return False
    return pair_lcm_divisor(M) is not None


def pdn_hypothesis(M: MonomialIdeal) -> int | None:
    """
    A pivot variable v such that, for every variable x_i, some generator has the
    form v^a * x_i^b with b >= 1 (for x_i = v: a pure power of v).
    """
    if M.is_zero:
        return None
    supports = [support(g) for g in M.generators]
    for v in range(M.n):
        ok = True
        for i in range(M.n):
            allowed = {v, i}
            if not any(
                g.exponents[i] >= 1 and supp <= allowed
                for g, supp in zip(M.generators, supports)
            ):
                ok = False
                break
        if ok:
            return v
    return None
