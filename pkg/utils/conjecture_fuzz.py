# ---------------- utils/conjecture_fuzz.py ----------------
"""
Seeded random ideals, conjecture fuzzing and the acceptance suites.

Overview for future devs:
- Every random ideal comes from random.Random(seed) for one integer seed, so
  any instance in any report can be rebuilt with random_ideal(seed, params).
  Batches use seeds base, base + 1, ... and are processed in that order.
- Constraints (artinian / almost generic / p-semidominant / dominant) are met
  by rejection: a proposal is drawn (biased toward the constraint so
  acceptance stays high), minimalized, then checked with the real predicates.
  After params.retries failed draws we give up with IdealDomainError.
- Unconstrained draws pick a target size q and a target nondominant count t
  first, then reject until the minimal generating set has exactly that shape,
  so batches spread over q and p instead of piling up on small dominant ideals.
- conjecture_fuzz() only ever *reports*. A candidate counterexample found by
  the configured method is recomputed with the oracle before it is listed;
  if the oracle disagrees the instance is logged as a method mismatch instead.
- The suites re-run the theorem checks of betti_engine on random batches and
  collect failures as strings. Zero failures is the expected outcome.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Literal, Sequence

from utils.algebra.decompose import (
    first_decomposition,
    first_decomposition_table,
    has_purely_nondominant_part,
    second_decomposition,
)
from utils.algebra.errors import AlgebraError, IdealDomainError
from utils.algebra.fields import FieldSpec
from utils.algebra.homology import BettiTable, betti_oracle
from utils.algebra.ideals import (
    MonomialIdeal,
    classify,
    exempt_pair_generic,
    is_almost_generic,
    is_artinian,
    minimalize,
    nondominant_part,
    pair_lcm_divisor,
)
from utils.algebra.monomials import Monomial, VariableSet, divides, lcm, lcm_all
from utils.algebra.taylor import (
    DEFAULT_FACE_CAP,
    build_scarf,
    build_taylor,
    check_face_bijection,
    contract_sequence,
    differential_squares_to_zero,
    face_map_f,
    mask_of,
    members_of,
)
from utils.betti_engine import (
    METHODS,
    Method,
    artinian_check,
    betti,
    betti_by_cancellation,
    betti_dominant,
    characteristic_check,
    min_hdeg_check,
    no_nondominant_part_check,
    pd2_check,
    pdn_check,
    verify_methods,
)

Conjecture = Literal["C1", "C2", "C3"]
CONJECTURES: tuple[Conjecture, ...] = ("C1", "C2", "C3")
CONJECTURE_STATEMENTS: dict[str, str] = {
    "C1": "Only two variables repeat an exponent  =>  characteristic Betti numbers",
    "C2": "Nondominant part almost generic  =>  characteristic Betti numbers in minimal homological degrees",
    "C3": "Some generator divides every pairwise lcm  =>  pd = 2",
}


# ─────────────────────────────────────────────────────────────────────────────
# Random ideals
# ─────────────────────────────────────────────────────────────────────────────

SHAPE_ATTEMPTS = 50


@dataclass(frozen=True)
class FuzzParams:
    """
    Bounds for random ideals: up to `vars` variables, up to `gens` generators
    drawn (before minimalization), exponents in 0..max_exp.
    """

    vars: int = 4
    gens: int = 6
    max_exp: int = 4
    artinian: bool = False
    almost_generic: bool = False
    semidominant: int | None = None
    dominant: bool = False
    retries: int = 500

    def __post_init__(self):
        if self.vars < 1 or self.gens < 1 or self.max_exp < 1:
            raise IdealDomainError(f"vars, gens and max_exp must all be >= 1, got {self}")
        if self.semidominant is not None and not 0 <= self.semidominant <= self.gens:
            raise IdealDomainError(f"Cannot draw a {self.semidominant}-semidominant ideal from {self.gens} generators")
        if self.artinian and self.gens < self.vars:
            raise IdealDomainError(f"An Artinian ideal in {self.vars} variables needs gens >= vars")


def _uniform(rng: random.Random, n: int, max_exp: int) -> Monomial:
    while True:
        exps = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(exps):
            return Monomial(exps)


def _generic_rows(rng: random.Random, n: int, q: int, max_exp: int, exempt: set[int]) -> list[list[int]]:
    """Exponent rows where no variable outside exempt repeats a nonzero value."""
    rows = [[0] * n for _ in range(q)]
    for v in range(n):
        if v in exempt:
            for row in rows:
                row[v] = rng.randint(0, max_exp)
            continue
        k = rng.randint(0, min(q, max_exp))
        values = rng.sample(range(1, max_exp + 1), k)
        for row, value in zip(rng.sample(rows, k), values):
            row[v] = value
    return rows


def _propose_artinian(rng: random.Random, p: FuzzParams, variables: VariableSet) -> list[Monomial]:
    n = len(variables)
    q = rng.randint(n, max(n, p.gens))
    gens = [Monomial.variable(n, v, rng.randint(1, p.max_exp)) for v in range(n)]
    gens += [_uniform(rng, n, p.max_exp) for _ in range(q - n)]
    return gens


def _propose_dominant(rng: random.Random, p: FuzzParams, variables: VariableSet, q: int | None = None) -> list[Monomial]:
    n = len(variables)
    q = q if q is not None else rng.randint(1, min(n, p.gens))
    witnesses = rng.sample(range(n), q)
    gens = []
    for w in witnesses:
        exps = [rng.randint(0, p.max_exp - 1) for _ in range(n)]
        exps[w] = p.max_exp
        gens.append(Monomial(tuple(exps)))
    return gens


def _propose_generic(rng: random.Random, p: FuzzParams, variables: VariableSet, exempt_count: int = 1) -> list[Monomial]:
    n = len(variables)
    q = rng.randint(min(2, p.gens), p.gens)
    exempt = set(rng.sample(range(n), min(exempt_count, n)))
    rows = _generic_rows(rng, n, q, p.max_exp, exempt)
    return [Monomial(tuple(r)) for r in rows if any(r)]


def _propose_semidominant(rng: random.Random, p: FuzzParams, variables: VariableSet, t: int) -> list[Monomial]:
    """s dominant generators with witness exponent max_exp + 1, then t ordinary ones."""
    n = len(variables)
    room = min(n, p.gens - t)
    s = rng.randint(1, room) if room >= 1 else 0
    witnesses = rng.sample(range(n), s)
    gens = []
    for w in witnesses:
        exps = [rng.randint(0, p.max_exp) for _ in range(n)]
        exps[w] = p.max_exp + 1
        gens.append(Monomial(tuple(exps)))
    gens += [_uniform(rng, n, p.max_exp) for _ in range(t)]
    return gens


def _propose_antichain(rng: random.Random, p: FuzzParams, variables: VariableSet, q: int) -> list[Monomial]:
    """Up to q pairwise incomparable monomials; stops early when draws keep colliding."""
    n = len(variables)
    kept: list[Monomial] = []
    for _ in range(20 * q):
        if len(kept) == q:
            break
        g = _uniform(rng, n, p.max_exp)
        if not any(divides(k, g) or divides(g, k) for k in kept):
            kept.append(g)
    return kept


def _propose_stratified(rng: random.Random, p: FuzzParams, variables: VariableSet, q: int, t: int) -> list[Monomial]:
    """
    q - t dominant rows (witness exponent max_exp, everything else below it)
    plus t rows whose exponent in every variable is matched by another row.
    """
    n = len(variables)
    top = p.max_exp
    witnesses = rng.sample(range(n), q - t)
    rows = []
    for w in witnesses:
        row = [rng.randint(0, top - 1) for _ in range(n)]
        row[w] = top
        rows.append(row)
    rest = [[rng.randint(0, top - 1) for _ in range(n)] for _ in range(t)]
    for v in range(n):
        if v in witnesses:
            continue
        for r in rest:
            others = [row[v] for row in rows + rest if row is not r]
            ceiling = max(others, default=0)
            if r[v] > ceiling:
                r[v] = ceiling
    return [Monomial(tuple(r)) for r in rows + rest if any(r)]


def _draw_shape(rng: random.Random, p: FuzzParams, n: int) -> tuple[int, int]:
    """Target (q, t): q uniform over the allowed sizes, t uniform over the feasible nondominant counts."""
    q = rng.randint(min(2, p.gens) if n >= 2 else 1, p.gens)
    t = rng.randint(max(0, q - n), q)
    return q, t


def _has_shape(M: MonomialIdeal, q: int, t: int | None) -> bool:
    if not M.is_proper or M.q != q:
        return False
    return t is None or classify(M).p == t


def _draw_shaped(rng: random.Random, p: FuzzParams, variables: VariableSet) -> MonomialIdeal | None:
    """One target shape, tried SHAPE_ATTEMPTS times; None when it never comes out right."""
    q, t = _draw_shape(rng, p, len(variables))
    for _ in range(SHAPE_ATTEMPTS):
        if p.max_exp >= 2:
            M = minimalize(_propose_stratified(rng, p, variables, q, t), variables)
            if _has_shape(M, q, t):
                return M
        else:
            # Squarefree: no room below the witness exponent, so only q is targeted.
            M = minimalize(_propose_antichain(rng, p, variables, q), variables)
            if _has_shape(M, q, None):
                return M
    return None


def _accepts(M: MonomialIdeal, p: FuzzParams) -> bool:
    if not M.is_proper:
        return False
    if p.artinian and not is_artinian(M)[0]:
        return False
    if p.almost_generic and not is_almost_generic(M)[0]:
        return False
    report = classify(M)
    if p.dominant and not report.is_dominant:
        return False
    if p.semidominant is not None and report.p != p.semidominant:
        return False
    return True


def _draw_variables(rng: random.Random, p: FuzzParams) -> VariableSet:
    low = 2 if p.vars >= 2 else 1
    return VariableSet.indexed(rng.randint(low, p.vars))


def random_ideal(seed: int, params: FuzzParams | None = None) -> MonomialIdeal:
    """Deterministic random ideal for one seed, satisfying every requested constraint."""
    params = params or FuzzParams()
    rng = random.Random(seed)
    for _ in range(params.retries):
        variables = _draw_variables(rng, params)
        if params.artinian:
            gens = _propose_artinian(rng, params, variables)
        elif params.dominant:
            gens = _propose_dominant(rng, params, variables)
        elif params.almost_generic:
            gens = _propose_generic(rng, params, variables)
        elif params.semidominant is not None:
            gens = _propose_semidominant(rng, params, variables, params.semidominant)
        else:
            M = _draw_shaped(rng, params, variables)
            if M is not None:
                return M
            continue
        M = minimalize(gens, variables)
        if _accepts(M, params):
            return M
    raise IdealDomainError(f"No ideal matching {params} after {params.retries} draws (seed {seed})")


def random_batch(count: int, seed: int, params: FuzzParams | None = None) -> list[tuple[int, MonomialIdeal]]:
    return [(seed + i, random_ideal(seed + i, params)) for i in range(count)]


# ─────────────────────────────────────────────────────────────────────────────
# Conjecture hypotheses
# ─────────────────────────────────────────────────────────────────────────────

def c1_hypothesis(M: MonomialIdeal) -> bool:
    """At most two variables repeat a nonzero exponent across generators."""
    return M.is_proper and exempt_pair_generic(M) is not None


def c2_hypothesis(M: MonomialIdeal) -> bool:
    """Some nondominant generator exists and the nondominant ones generate an almost generic ideal."""
    if not M.is_proper:
        return False
    if classify(M).p == 0:
        return False
    return is_almost_generic(nondominant_part(M))[0]


def c3_hypothesis(M: MonomialIdeal) -> bool:
    """q >= 2 and some generator divides the lcm of every pair of distinct generators."""
    return M.is_proper and M.q >= 2 and pair_lcm_divisor(M) is not None


def _propose_c1(rng, p, variables):
    return _propose_generic(rng, p, variables, exempt_count=2)


def _propose_c2(rng, p, variables):
    n = len(variables)
    room = min(n, p.gens - 1)
    s = rng.randint(0, room) if room >= 0 else 0
    gens = []
    for w in rng.sample(range(n), s):
        exps = [rng.randint(0, p.max_exp) for _ in range(n)]
        exps[w] = p.max_exp + 1
        gens.append(Monomial(tuple(exps)))
    t = rng.randint(1, max(1, p.gens - s))
    exempt = {rng.randrange(n)}
    gens += [Monomial(tuple(r)) for r in _generic_rows(rng, n, t, p.max_exp, exempt) if any(r)]
    return gens


def _propose_c3(rng, p, variables):
    n = len(variables)
    others = [_uniform(rng, n, p.max_exp) for _ in range(rng.randint(2, max(2, p.gens - 1)))]
    pair_lcms = [lcm(a, b) for a, b in combinations(others, 2)]
    floor = Monomial(tuple(min(col) for col in zip(*(l.exponents for l in pair_lcms))))
    gens = others + ([floor] if any(floor.exponents) else [])
    return gens


_HYPOTHESES: dict[str, tuple[Callable[[MonomialIdeal], bool], Callable]] = {
    "C1": (c1_hypothesis, _propose_c1),
    "C2": (c2_hypothesis, _propose_c2),
    "C3": (c3_hypothesis, _propose_c3),
}


def conjecture_instance(which: Conjecture, seed: int, params: FuzzParams | None = None) -> MonomialIdeal:
    """Random ideal for one seed satisfying the hypothesis of the named conjecture."""
    params = params or FuzzParams()
    hypothesis, propose = _HYPOTHESES[which]
    rng = random.Random(seed)
    for _ in range(params.retries):
        variables = _draw_variables(rng, params)
        M = minimalize(propose(rng, params, variables), variables)
        if hypothesis(M):
            return M
    raise IdealDomainError(f"No {which} instance after {params.retries} draws (seed {seed})")


def conjecture_holds(which: Conjecture, M: MonomialIdeal, table: BettiTable) -> bool:
    if which == "C1":
        return characteristic_check(M, table).is_characteristic
    if which == "C2":
        return characteristic_check(M, table).min_hdeg_ok
    return table.pd == 2


# ─────────────────────────────────────────────────────────────────────────────
# Fuzz reports
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Counterexample:
    seed: int
    ideal: MonomialIdeal
    table: BettiTable


@dataclass
class FuzzReport:
    conjecture: str
    tested: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)
    method_mismatches: list[int] = field(default_factory=list)
    exhibits: list[int] = field(default_factory=list)

    @property
    def summary(self) -> str:
        if not self.counterexamples:
            return f"{self.conjecture}: no counterexample in budget ({self.tested} tested)"
        return f"{self.conjecture}: {len(self.counterexamples)} counterexample(s) in {self.tested} tested"


def conjecture_fuzz(
    which: Conjecture,
    params: FuzzParams | None = None,
    budget: int = 50,
    seed: int = 0,
    method: Method = "decompose",
    field: FieldSpec | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> FuzzReport:
    """Search `budget` seeded instances of the conjecture's hypothesis for a failing conclusion."""
    if which not in CONJECTURES:
        raise ValueError(f"Unknown conjecture {which!r}; expected one of {', '.join(CONJECTURES)}")
    params = params or FuzzParams()
    field = field or FieldSpec.rationals()
    report = FuzzReport(conjecture=which)

    for i in range(budget):
        s = seed + i
        try:
            M = conjecture_instance(which, s, params)
        except IdealDomainError as e:
            logging.warning("Skipping seed %s: %s", s, e)
            report.skipped.append(s)
            continue
        table = betti(M, method, field, cap=cap)
        report.tested += 1
        if not betti_by_cancellation(M, field, cap=cap).is_subcomplex:
            report.exhibits.append(s)
        if conjecture_holds(which, M, table):
            continue
        oracle_table = table if method == "oracle" else betti_oracle(M, field, cap=cap)
        if not oracle_table.same_numbers(table):
            logging.error("Seed %s: %s and oracle disagree on %s; not reported as a counterexample", s, method, M)
            report.method_mismatches.append(s)
            if conjecture_holds(which, M, oracle_table):
                continue
        logging.warning("%s counterexample at seed %s: %s", which, s, M)
        report.counterexamples.append(Counterexample(seed=s, ideal=M, table=oracle_table))

    logging.info(report.summary)
    return report


# ─────────────────────────────────────────────────────────────────────────────
# Acceptance suites
# ─────────────────────────────────────────────────────────────────────────────

@dataclass
class SuiteResult:
    name: str
    tested: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, seed: int, M: MonomialIdeal, what: str) -> None:
        self.failures.append(f"seed {seed}: {M}: {what}")


def method_agreement_suite(
    count: int = 200,
    seed: int = 0,
    fields: Sequence[FieldSpec] = (FieldSpec.rationals(), FieldSpec.prime(2), FieldSpec.prime(32003)),
    params: FuzzParams | None = None,
) -> SuiteResult:
    """decompose, oracle and cancel give identical tables on every instance."""
    params = params or FuzzParams(vars=5, gens=7, max_exp=4)
    result = SuiteResult("method agreement")
    for s, M in random_batch(count, seed, params):
        for F in fields:
            cmp = verify_methods(M, F, METHODS, order_seed=s)
            result.tested += 1
            if not cmp.agree:
                result.fail(s, M, f"methods disagree over {F}")
    return result


def dominant_suite(count: int = 100, seed: int = 0, params: FuzzParams | None = None) -> SuiteResult:
    params = params or FuzzParams(vars=5, gens=5, max_exp=4, dominant=True)
    result = SuiteResult("dominant ideals")
    for s, M in random_batch(count, seed, params):
        result.tested += 1
        table = betti_dominant(M)
        if not table.same_numbers(betti_oracle(M)):
            result.fail(s, M, "face counts differ from the oracle")
        if sum(table.totals) != 2 ** M.q:
            result.fail(s, M, f"total Betti number {sum(table.totals)} != 2^{M.q}")
        T = build_taylor(M.generators, n=M.n)
        if len(build_scarf(T)) != T.size:
            result.fail(s, M, "Scarf complex is smaller than the Taylor complex")
    return result


def artinian_suite(count: int = 100, seed: int = 0, params: FuzzParams | None = None) -> SuiteResult:
    params = params or FuzzParams(vars=4, gens=7, max_exp=4, artinian=True)
    result = SuiteResult("Artinian ideals")
    for s, M in random_batch(count, seed, params):
        result.tested += 1
        table = betti(M, "oracle")
        check = artinian_check(M, table)
        if check.failed:
            result.fail(s, M, check.detail)
        pdn = pdn_check(M, table)
        if not pdn.applies or pdn.failed:
            result.fail(s, M, f"pd = n criterion: {pdn.detail or 'hypothesis not detected'}")
    return result


def min_hdeg_suite(
    count: int = 100,
    seed: int = 0,
    params: FuzzParams | None = None,
    name: str = "almost generic ideals",
) -> SuiteResult:
    """characteristic Betti numbers in minimal homological degrees."""
    params = params or FuzzParams(vars=4, gens=6, max_exp=4, almost_generic=True)
    result = SuiteResult(name)
    for s, M in random_batch(count, seed, params):
        result.tested += 1
        table = betti(M, "oracle")
        check = min_hdeg_check(M, table)
        if not check.applies or check.failed:
            result.fail(s, M, check.detail or "hypothesis not detected")
        if no_nondominant_part_check(M, table).failed:
            result.fail(s, M, "no purely nondominant part but not characteristic")
    return result


def semidominant_suite(count: int = 100, seed: int = 0, params: FuzzParams | None = None) -> SuiteResult:
    params = params or FuzzParams(vars=4, gens=6, max_exp=3, semidominant=2)
    return min_hdeg_suite(count, seed, params, name="2-semidominant ideals")


def pd_criteria_suite(count: int = 100, seed: int = 0, params: FuzzParams | None = None) -> SuiteResult:
    """Whenever a pd hypothesis is detected on a random ideal, its conclusion holds."""
    params = params or FuzzParams(vars=4, gens=6, max_exp=3)
    result = SuiteResult("pd criteria")
    for s, M in random_batch(count, seed, params):
        result.tested += 1
        table = betti(M, "oracle")
        for check in (pd2_check(M, table), pdn_check(M, table)):
            if check.failed:
                result.fail(s, M, f"{check.name}: {check.detail}")
    return result


def decomposition_suite(count: int = 100, seed: int = 0, params: FuzzParams | None = None) -> SuiteResult:
    """One-level identity, single contributor per entry, almost-generic closure, leaf purity."""
    params = params or FuzzParams(vars=5, gens=7, max_exp=4)
    result = SuiteResult("structural decompositions")
    for s, M in random_batch(count, seed, params):
        result.tested += 1
        report = classify(M)
        tree = second_decomposition(M)
        for leaf in tree.leaves():
            if leaf.kind == "unit":
                continue
            leaf_report = classify(leaf.ideal)
            if not (leaf_report.is_dominant or leaf_report.is_purely_nondominant):
                result.fail(s, M, f"leaf {leaf.ideal} is neither dominant nor purely nondominant")
        if report.is_purely_nondominant:
            continue
        identity = first_decomposition_table(M)
        if not identity.table.same_numbers(betti_oracle(M)):
            result.fail(s, M, "first decomposition does not reproduce the oracle table")
        if not identity.unique_contributors:
            result.fail(s, M, "two terms of C contribute to the same entry")
        terms = first_decomposition(M)
        children = [second_decomposition(t.ideal) for t in terms if not t.ideal.is_unit]
        if has_purely_nondominant_part(tree) != any(has_purely_nondominant_part(c) for c in children):
            result.fail(s, M, "purely nondominant part is not inherited from the contracts")
        if is_almost_generic(M)[0]:
            for t in terms:
                if t.ideal.is_proper and not is_almost_generic(t.ideal)[0]:
                    result.fail(s, M, f"contract {t.ideal} at {t.m.exponents} is not almost generic")
    return result


def _dominant_first(M: MonomialIdeal) -> tuple[list[Monomial], int]:
    report = classify(M)
    dom = report.dominant_indices()
    order = dom + report.nondominant_indices()
    return [M.generators[i] for i in order], len(dom)


def structural_suite(count: int = 1000, seed: int = 0, params: FuzzParams | None = None) -> SuiteResult:
    """
    d o d = 0, the face-map multidegree identity, the face bijection counts,
    the (-1)^j sign relation, and equal-multidegree faces sharing their
    dominant generators, on random (dominant subset, face) pairs.
    """
    params = params or FuzzParams(vars=5, gens=7, max_exp=4)
    result = SuiteResult("structural invariants")
    s = seed
    while result.tested < count:
        rng = random.Random(s)
        M = random_ideal(s, params)
        gens, d_total = _dominant_first(M)
        if d_total == 0:
            s += 1
            continue
        T = build_taylor(gens, n=M.n)
        if not differential_squares_to_zero(T):
            result.fail(s, M, "d o d != 0")

        dominant_mask = mask_of(range(d_total))
        for masks in T.faces_by_mdeg.values():
            if len({x & dominant_mask for x in masks}) > 1:
                result.fail(s, M, "faces of equal multidegree hold different dominant generators")
                break

        d = rng.randint(1, d_total)
        H = list(range(d, len(gens)))
        R = sorted(rng.sample(range(d), rng.randint(0, d)))
        j = len(R)
        m = lcm_all((gens[r] for r in R), M.n)
        if H:
            contract = build_taylor(contract_sequence(gens, R, H), n=M.n)
            local = rng.randrange(contract.size)
            image = face_map_f(R, local, H, T)
            if image.mdeg.exponents != tuple(a + b for a, b in zip(m.exponents, contract.keys[local])):
                result.fail(s, M, f"mdeg(f(R={R}, {members_of(local)})) != lcm(R) * mdeg")
            bij = check_face_bijection(T, R, H)
            if not bij.ok:
                result.fail(s, M, f"face bijection: {bij.mismatches[0]}")
            if local:
                bit = rng.choice(members_of(local))
                sub = local ^ (1 << bit)
                sign_c, mono_c = contract.entry(local, sub)
                sign_t, mono_t = T.entry(image.members, face_map_f(R, sub, H, T).members)
                if sign_t != (-1) ** j * sign_c or mono_t != mono_c:
                    result.fail(s, M, f"sign relation fails for R={R}, face {members_of(local)}")
        result.tested += 1
        s += 1
    return result


def all_suites(seed: int = 0, scale: float = 1.0) -> list[SuiteResult]:
    """Every acceptance suite at its default size times scale."""
    def n(k: int) -> int:
        return max(1, int(k * scale))

    suites = [
        lambda: method_agreement_suite(n(200), seed),
        lambda: dominant_suite(n(100), seed),
        lambda: artinian_suite(n(100), seed),
        lambda: min_hdeg_suite(n(100), seed),
        lambda: semidominant_suite(n(100), seed),
        lambda: pd_criteria_suite(n(100), seed),
        lambda: decomposition_suite(n(100), seed),
        lambda: structural_suite(n(1000), seed),
    ]
    out = []
    for run in suites:
        try:
            r = run()
        except AlgebraError as e:
            r = SuiteResult("suite aborted", failures=[str(e)])
        logging.info("Suite %s: %s tested, %s failures", r.name, r.tested, len(r.failures))
        out.append(r)
    return out
