# ---------------- utils/betti_engine.py ----------------
"""
Betti Engine

Overview for future devs:
- betti() is the single entry point the CLI and the Streamlit pages call. Three
  interchangeable methods, all returning a BettiTable:
    * decompose (default): second structural decomposition; dominant leaves
      are read off their Taylor complex, purely nondominant leaves go to the
      oracle, unit leaves contribute nothing; everything summed with the
      accumulated shifts.
    * oracle: exact strand homology of the full Taylor complex.
    * cancel: consecutive cancellations on the full Taylor complex.
- The checks below (characteristic Betti numbers, pd criteria, Artinian
  bounds, Scarf detection) all take an already computed table, so one table
  can feed several checks.

Rules:
- No Streamlit imports. Pure functions over the algebra package.
- Checks report; they never "fix" a table. A failed theorem check is a
  TheoremViolationError only where the caller asked for a witness.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Literal, Sequence

from utils.algebra.decompose import DecompositionTree, has_purely_nondominant_part, second_decomposition
from utils.algebra.errors import IdealDomainError, TheoremViolationError
from utils.algebra.fields import FieldSpec
from utils.algebra.homology import BettiTable, betti_oracle, face_counts
from utils.algebra.ideals import (
    MonomialIdeal,
    classify,
    is_almost_generic,
    is_artinian,
    pd2_hypothesis,
    pdn_hypothesis,
)
from utils.algebra.monomials import Monomial, support
from utils.algebra.taylor import (
    DEFAULT_FACE_CAP,
    MinimalBasis,
    build_scarf,
    build_taylor,
    cancel_minimize,
    check_face_cap,
)

Method = Literal["decompose", "oracle", "cancel"]
METHODS: tuple[Method, ...] = ("decompose", "oracle", "cancel")


# ─────────────────────────────────────────────────────────────────────────────
# Betti tables
# ─────────────────────────────────────────────────────────────────────────────

def _trivial_table(M: MonomialIdeal, field: FieldSpec) -> BettiTable | None:
    if M.is_zero:
        return BettiTable.from_counter({(0, M.unit_monomial()): 1}, field, M.n)
    if M.is_unit:
        return BettiTable.from_counter({}, field, M.n)
    return None


def betti_dominant(D: MonomialIdeal, field: FieldSpec | None = None, cap: int = DEFAULT_FACE_CAP) -> BettiTable:
    """Dominant ideals are resolved by their Taylor complex: count faces per (hdeg, mdeg)."""
    field = field or FieldSpec.rationals()
    if not classify(D).is_dominant:
        raise IdealDomainError(f"{D} is not dominant")
    T = build_taylor(D.generators, n=D.n, cap=cap)
    return BettiTable.from_counter(face_counts(T), field, D.n)


def betti_from_tree(
    tree: DecompositionTree,
    n: int,
    field: FieldSpec | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> BettiTable:
    """Sum the leaf tables of a decomposition tree with their accumulated shifts."""
    field = field or FieldSpec.rationals()
    total: Counter = Counter()
    for leaf in tree.leaves():
        if leaf.kind == "unit":
            continue
        if leaf.kind == "dominant":
            table = betti_dominant(leaf.ideal, field, cap=cap)
        else:
            table = betti_oracle(leaf.ideal, field, cap=cap)
        total.update(table.shifted(leaf.shift_j, leaf.shift_m))
    return BettiTable.from_counter(total, field, n)


@dataclass(frozen=True)
class CancelOutcome:
    table: BettiTable
    basis: MinimalBasis
    is_subcomplex: bool


def betti_by_cancellation(
    M: MonomialIdeal,
    field: FieldSpec | None = None,
    order_seed: int = 0,
    cap: int = DEFAULT_FACE_CAP,
) -> CancelOutcome:
    """
    Cancel on the Taylor complex of M and report whether the surviving faces
    still form a subcomplex of it. Non-subcomplex survivors are logged as
    exhibits; they are an observation, not an error.
    """
    field = field or FieldSpec.rationals()
    T = build_taylor(M.generators, n=M.n, cap=cap)
    basis = cancel_minimize(T, field, order_seed=order_seed)
    sub = basis.is_subcomplex_of(T)
    if not sub:
        logging.info(
            "Exhibit: surviving faces of %s are not a Taylor subcomplex (field %s, order seed %s)",
            M, field, order_seed,
        )
    return CancelOutcome(table=BettiTable.from_counter(basis.entries, field, M.n), basis=basis, is_subcomplex=sub)


def betti(
    M: MonomialIdeal,
    method: Method = "decompose",
    field: FieldSpec | None = None,
    cap: int = DEFAULT_FACE_CAP,
    order_seed: int = 0,
) -> BettiTable:
    """beta_{i,l}(S/M) by the requested method."""
    field = field or FieldSpec.rationals()
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}; expected one of {', '.join(METHODS)}")
    trivial = _trivial_table(M, field)
    if trivial is not None:
        return trivial
    check_face_cap(M.q, cap)
    if method == "oracle":
        return betti_oracle(M, field, cap=cap)
    if method == "cancel":
        return betti_by_cancellation(M, field, order_seed=order_seed, cap=cap).table
    tree = second_decomposition(M, cap=cap)
    logging.info("Decomposition of %s: %s", M, dict(tree.kind_counts()))
    return betti_from_tree(tree, M.n, field, cap=cap)


def pd(M: MonomialIdeal, method: Method = "decompose", field: FieldSpec | None = None,
       cap: int = DEFAULT_FACE_CAP) -> int:
    """Projective dimension of S/M. pd(S/0) = 0; the unit ideal is rejected."""
    if M.is_unit:
        raise IdealDomainError("S/S is the zero module; its projective dimension is undefined")
    return betti(M, method, field, cap=cap).pd


# ─────────────────────────────────────────────────────────────────────────────
# Characteristic Betti numbers
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class CharacteristicReport:
    """
    L: multidegrees carried by an odd number of Taylor faces.
    f_values: least hdeg of a Taylor face per multidegree of the lcm lattice.
    violations: multidegrees whose total Betti value is wrong for L.
    """

    is_characteristic: bool
    L: frozenset[Monomial]
    violations: tuple[Monomial, ...]
    min_hdeg_ok: bool
    f_values: dict[Monomial, int] = field(default_factory=dict)
    misplaced: tuple[Monomial, ...] = ()


def characteristic_check(M: MonomialIdeal, table: BettiTable, cap: int = DEFAULT_FACE_CAP) -> CharacteristicReport:
    if not M.is_proper:
        raise IdealDomainError(f"Characteristic Betti numbers are defined for proper nonzero ideals, got {M}")
    T = build_taylor(M.generators, n=M.n, cap=cap)
    L: set[Monomial] = set()
    f_values: dict[Monomial, int] = {}
    for key, masks in T.faces_by_mdeg.items():
        l = Monomial(key)
        f_values[l] = min(int(T.hdegs[x]) for x in masks)
        if len(masks) % 2 == 1:
            L.add(l)

    candidates = set(f_values) | table.multidegrees()
    violations = []
    for l in sorted(candidates, key=Monomial.sort_key):
        expected = 1 if l in L else 0
        if table.total_at(l) != expected:
            violations.append(l)

    misplaced = []
    if not violations:
        for l in sorted(L, key=Monomial.sort_key):
            if table.get(f_values[l], l) != 1:
                misplaced.append(l)

    return CharacteristicReport(
        is_characteristic=not violations,
        L=frozenset(L),
        violations=tuple(violations),
        min_hdeg_ok=not violations and not misplaced,
        f_values=f_values,
        misplaced=tuple(misplaced),
    )


# ─────────────────────────────────────────────────────────────────────────────
# Artinian checks
# ─────────────────────────────────────────────────────────────────────────────

def _require_artinian(M: MonomialIdeal, what: str) -> None:
    ok, _ = is_artinian(M)
    if not ok:
        raise IdealDomainError(f"{what} needs an Artinian ideal; {M} is not")


def charalambous_check(M: MonomialIdeal, table: BettiTable) -> bool:
    """beta_i(S/M) >= C(n, i) for i = 0..n."""
    _require_artinian(M, "The binomial lower bound")
    totals = table.totals
    for i in range(M.n + 1):
        have = totals[i] if i < len(totals) else 0
        if have < comb(M.n, i):
            return False
    return True


def full_support_witness(M: MonomialIdeal, table: BettiTable) -> Monomial:
    """A multidegree at hdeg n with nonzero Betti number divisible by every variable."""
    _require_artinian(M, "The full-support witness")
    every = frozenset(range(M.n))
    for i, l, _ in table.items():
        if i == M.n and support(l) == every:
            return l
    raise TheoremViolationError(f"No full-support multidegree at homological degree {M.n} for {M}")


# ─────────────────────────────────────────────────────────────────────────────
# Scarf detection
# ─────────────────────────────────────────────────────────────────────────────

def scarf_counts(M: MonomialIdeal, cap: int = DEFAULT_FACE_CAP) -> Counter:
    T = build_taylor(M.generators, n=M.n, cap=cap)
    return Counter((f.hdeg, f.mdeg) for f in build_scarf(T))


def is_scarf(M: MonomialIdeal, table: BettiTable | None = None, cap: int = DEFAULT_FACE_CAP) -> bool:
    """True iff the Scarf faces account for every Betti number of S/M."""
    if not M.is_proper:
        raise IdealDomainError(f"Scarf detection needs a proper nonzero ideal, got {M}")
    table = table or betti_oracle(M, cap=cap)
    return dict(scarf_counts(M, cap=cap)) == dict(table.entries)


# ─────────────────────────────────────────────────────────────────────────────
# Theorem checks used by the suites
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class TheoremCheck:
    """applies: the hypothesis held. holds: the conclusion held (None when it did not apply)."""

    name: str
    applies: bool
    holds: bool | None
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.applies and self.holds is False


def pd2_check(M: MonomialIdeal, table: BettiTable) -> TheoremCheck:
    if M.q < 2 or not pd2_hypothesis(M):
        return TheoremCheck("pd2", False, None)
    return TheoremCheck("pd2", True, table.pd == 2, f"pd = {table.pd}")


def pdn_check(M: MonomialIdeal, table: BettiTable) -> TheoremCheck:
    v = pdn_hypothesis(M)
    if v is None:
        return TheoremCheck("pdn", False, None)
    return TheoremCheck("pdn", True, table.pd == M.n, f"pivot {M.variables.names[v]}, pd = {table.pd}, n = {M.n}")


def artinian_check(M: MonomialIdeal, table: BettiTable) -> TheoremCheck:
    """pd = n, the binomial bound, and a full-support witness, together."""
    ok, _ = is_artinian(M)
    if not ok:
        return TheoremCheck("artinian", False, None)
    problems = []
    if table.pd != M.n:
        problems.append(f"pd = {table.pd} != n = {M.n}")
    if not charalambous_check(M, table):
        problems.append(f"totals {table.totals} below the binomial bound")
    try:
        full_support_witness(M, table)
    except TheoremViolationError as e:
        problems.append(str(e))
    return TheoremCheck("artinian", True, not problems, "; ".join(problems))


def no_nondominant_part_check(
    M: MonomialIdeal,
    table: BettiTable,
    tree: DecompositionTree | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> TheoremCheck:
    """No purely nondominant leaf in the second decomposition => characteristic."""
    tree = tree or second_decomposition(M, cap=cap)
    if has_purely_nondominant_part(tree):
        return TheoremCheck("characteristic", False, None)
    report = characteristic_check(M, table)
    return TheoremCheck("characteristic", True, report.is_characteristic,
                        f"violations at {[l.exponents for l in report.violations]}")


def min_hdeg_check(M: MonomialIdeal, table: BettiTable) -> TheoremCheck:
    """Almost generic or 2-semidominant => characteristic in minimal homological degrees."""
    generic, _ = is_almost_generic(M)
    semi2 = classify(M).p == 2
    if not (generic or semi2):
        return TheoremCheck("min_hdeg", False, None)
    report = characteristic_check(M, table)
    return TheoremCheck(
        "min_hdeg", True, report.min_hdeg_ok,
        f"violations {[l.exponents for l in report.violations]}, misplaced {[l.exponents for l in report.misplaced]}",
    )


# ─────────────────────────────────────────────────────────────────────────────
# Tri-method verification
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class MethodComparison:
    ideal: MonomialIdeal
    field: FieldSpec
    tables: dict[str, BettiTable]

    @property
    def agree(self) -> bool:
        tables = list(self.tables.values())
        return all(t.same_numbers(tables[0]) for t in tables[1:])

    def disagreements(self, reference: str = "oracle") -> dict[str, dict[tuple[int, Monomial], tuple[int, int]]]:
        """Per method: {(hdeg, mdeg): (method value, reference value)} where they differ."""
        ref = self.tables[reference]
        out = {}
        for name, t in self.tables.items():
            if name == reference:
                continue
            keys = set(t.entries) | set(ref.entries)
            diff = {k: (t.entries.get(k, 0), ref.entries.get(k, 0))
                    for k in keys if t.entries.get(k, 0) != ref.entries.get(k, 0)}
            if diff:
                out[name] = diff
        return out


def verify_methods(
    M: MonomialIdeal,
    field: FieldSpec | None = None,
    methods: Sequence[Method] = METHODS,
    cap: int = DEFAULT_FACE_CAP,
    order_seed: int = 0,
) -> MethodComparison:
    field = field or FieldSpec.rationals()
    tables = {m: betti(M, m, field, cap=cap, order_seed=order_seed) for m in methods}
    return MethodComparison(ideal=M, field=field, tables=tables)
