# ---------------- utils/algebra/taylor.py ----------------
"""
Taylor complexes, Scarf complexes, the contract face map and cancellation.

Overview for future devs:
- A face is a subset of generator positions stored as an int bitmask.
  Bit b set <=> generator b is a member. hdeg = popcount, mdeg = lcm of members.
- TaylorComplex keeps the multidegrees of all 2^q faces in one numpy table,
  filled bottom-up: table[mask | 1<<b] = max(table[mask], gens[b]). That keeps
  construction at O(2^q * n).
- Differential of face sigma (members i_1 < ... < i_s):
      d[sigma] = sum_j (-1)^(j+1) * lcm(sigma)/lcm(sigma - i_j) * [sigma - i_j]
  Because the complex is multigraded, the monomial part of any entry is always
  mdeg(source)/mdeg(target); cancel_minimize therefore tracks scalars only.
- cancel_minimize() is the consecutive-cancellation loop: pick a unit entry
  (same multidegree, nonzero scalar), drop the pair, apply the rank-one update
  b_ts <- b_ts - b_t,theta * b_pi,s / b_pi,theta to what remains.

Hard rules:
- q above the face cap raises ResourceCapError before anything is allocated.
- Exponents must stay below MAX_EXPONENT to enter the int64 table.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from utils.algebra.errors import (
    ExponentOverflowError,
    IdealDomainError,
    ResourceCapError,
    TheoremViolationError,
)
from utils.algebra.fields import FieldSpec
from utils.algebra.monomials import Monomial, lcm_all, quotient

DEFAULT_FACE_CAP = 20
MAX_EXPONENT = 2**62


# =============================================================================
# Bitmask helpers
# =============================================================================

def members_of(mask: int) -> tuple[int, ...]:
    """Sorted generator positions in a face."""
    out = []
    b = 0
    while mask:
        if mask & 1:
            out.append(b)
        mask >>= 1
        b += 1
    return tuple(out)


def mask_of(members: Sequence[int]) -> int:
    mask = 0
    for i in members:
        mask |= 1 << i
    return mask


def facet_sign(mask: int, bit: int) -> int:
    """(-1)^(j+1) where j is the 1-based position of bit among the members."""
    below = bin(mask & ((1 << bit) - 1)).count("1")
    return 1 if below % 2 == 0 else -1


def check_face_cap(q: int, cap: int = DEFAULT_FACE_CAP) -> None:
    if q > cap:
        raise ResourceCapError(
            f"{q} generators exceed the face cap of {cap}: the Taylor complex would have "
            f"2^{q} = {2**q} faces"
        )


# =============================================================================
# Data model
# =============================================================================

@dataclass(frozen=True)
class Face:
    members: int
    mdeg: Monomial
    hdeg: int

    @property
    def indices(self) -> tuple[int, ...]:
        return members_of(self.members)


@dataclass(frozen=True)
class TaylorComplex:
    """
    Taylor complex on an ordered generating sequence (need not be minimal).

    table[mask] is the exponent vector of mdeg(mask); hdegs[mask] its popcount.
    """

    generators: tuple[Monomial, ...]
    n: int
    table: np.ndarray = dc_field(repr=False, compare=False)
    hdegs: np.ndarray = dc_field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.q

    def mdeg(self, mask: int) -> Monomial:
        return Monomial(tuple(int(x) for x in self.table[mask]))

    def mdeg_key(self, mask: int) -> tuple[int, ...]:
        return self.keys[mask]

    @cached_property
    def keys(self) -> list[tuple[int, ...]]:
        """Hashable multidegree per face, index-aligned with table."""
        return [tuple(int(x) for x in row) for row in self.table]

    def face(self, mask: int) -> Face:
        return Face(members=mask, mdeg=self.mdeg(mask), hdeg=int(self.hdegs[mask]))

    def faces(self) -> Iterator[Face]:
        for mask in range(self.size):
            yield self.face(mask)

    @cached_property
    def faces_by_hdeg(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {i: [] for i in range(self.q + 1)}
        for mask in range(self.size):
            out[int(self.hdegs[mask])].append(mask)
        for masks in out.values():
            masks.sort(key=members_of)
        return out

    @cached_property
    def faces_by_mdeg(self) -> dict[tuple[int, ...], list[int]]:
        out: dict[tuple[int, ...], list[int]] = {}
        for mask, key in enumerate(self.keys):
            out.setdefault(key, []).append(mask)
        return out

    def boundary(self, mask: int) -> list[tuple[int, int, Monomial]]:
        """[(facet_mask, sign, monomial coefficient), ...] in member order."""
        out = []
        src = self.mdeg(mask)
        for b in members_of(mask):
            facet = mask ^ (1 << b)
            out.append((facet, facet_sign(mask, b), quotient(src, self.mdeg(facet))))
        return out

    def entry(self, source: int, target: int) -> tuple[int, Monomial] | None:
        """Differential entry from source to target, None if target is not a facet."""
        diff = source ^ target
        if target & ~source or bin(diff).count("1") != 1:
            return None
        bit = diff.bit_length() - 1
        return facet_sign(source, bit), quotient(self.mdeg(source), self.mdeg(target))

    def faces_with_mdeg(self, m: Monomial) -> list[Face]:
        return [self.face(mask) for mask in self.faces_by_mdeg.get(m.exponents, [])]


# =============================================================================
# Construction
# =============================================================================

def _multidegree_table(gens: Sequence[Monomial], n: int) -> tuple[np.ndarray, np.ndarray]:
    for g in gens:
        if any(e >= MAX_EXPONENT for e in g.exponents):
            raise ExponentOverflowError(f"Exponent in {g.exponents} is at or above 2^62")
    q = len(gens)
    table = np.zeros((1 << q, n), dtype=np.int64)
    hdegs = np.zeros(1 << q, dtype=np.int64)
    for b, g in enumerate(gens):
        lo, hi = 1 << b, 1 << (b + 1)
        table[lo:hi] = np.maximum(table[0:lo], np.asarray(g.exponents, dtype=np.int64))
        hdegs[lo:hi] = hdegs[0:lo] + 1
    return table, hdegs


def build_taylor(gens: Sequence[Monomial], n: int | None = None, cap: int = DEFAULT_FACE_CAP) -> TaylorComplex:
    """Taylor complex of an ordered generating sequence."""
    gens = tuple(gens)
    if n is None:
        if not gens:
            raise IdealDomainError("Cannot infer the variable count of an empty generating sequence")
        n = len(gens[0])
    check_face_cap(len(gens), cap)
    table, hdegs = _multidegree_table(gens, n)
    return TaylorComplex(generators=gens, n=n, table=table, hdegs=hdegs)


def build_scarf(T: TaylorComplex) -> list[Face]:
    """
    Faces whose multidegree is shared with no other face, sorted by (hdeg, members).

    Raises TheoremViolationError if the result is not closed under facets.
    """
    unique = {masks[0] for masks in T.faces_by_mdeg.values() if len(masks) == 1}
    for mask in unique:
        for b in members_of(mask):
            if mask ^ (1 << b) not in unique:
                raise TheoremViolationError(
                    f"Scarf faces are not closed: facet of {members_of(mask)} has a shared multidegree"
                )
    return [T.face(m) for m in sorted(unique, key=lambda m: (int(T.hdegs[m]), members_of(m)))]


# =============================================================================
# Contract face map
# =============================================================================

def contract_sequence(gens: Sequence[Monomial], R: Sequence[int], H: Sequence[int]) -> list[Monomial]:
    """h'_s = lcm(m, h_s)/m for h_s in H (order kept), m = lcm of the R generators."""
    n = len(gens[0])
    m = lcm_all((gens[r] for r in R), n)
    return [quotient(lcm_all((m, gens[h]), n), m) for h in H]


def face_map_f(R: Sequence[int], contract_face: Face | int, H: Sequence[int], T: TaylorComplex) -> Face:
    """
    Map a face of the contract complex (positions into H) to the face R u {h_s}
    of T. mdeg(result) = lcm(R) * mdeg(contract_face).
    """
    local = contract_face.members if isinstance(contract_face, Face) else contract_face
    if len(set(R)) != len(R) or len(set(H)) != len(H):
        raise IdealDomainError("Face map indices must be distinct")
    if set(R) & set(H):
        raise IdealDomainError(f"Dominant part {list(R)} collides with H positions {list(H)}")
    mask = mask_of(R)
    for s in members_of(local):
        if s >= len(H):
            raise IdealDomainError(f"Contract face position {s} is outside H (size {len(H)})")
        mask |= 1 << H[s]
    return T.face(mask)


@dataclass(frozen=True)
class BijectionCheck:
    """Outcome of comparing contract faces with their images, per (i, m')."""

    ok: bool
    mismatches: tuple[str, ...]


def check_face_bijection(T: TaylorComplex, R: Sequence[int], H: Sequence[int]) -> BijectionCheck:
    """
    For every multidegree m' of the contract complex and every i, the number of
    contract faces at (i, m') equals the number of faces of T at (i + j, m * m');
    no face of T has multidegree m * m' in homological degree below j.
    """
    j = len(R)
    contract = build_taylor(contract_sequence(T.generators, R, H), n=T.n)
    m = lcm_all((T.generators[r] for r in R), T.n)
    problems = []
    for key, masks in contract.faces_by_mdeg.items():
        lifted = tuple(a + b for a, b in zip(key, m.exponents))
        target = T.faces_by_mdeg.get(lifted, [])
        src_counts = Counter(int(contract.hdegs[x]) for x in masks)
        dst_counts = Counter(int(T.hdegs[x]) for x in target)
        low = [x for x in target if int(T.hdegs[x]) < j]
        if low:
            problems.append(f"m'={key}: {len(low)} faces of T below degree {j}")
        for i, c in src_counts.items():
            if dst_counts.get(i + j, 0) != c:
                problems.append(f"m'={key}, i={i}: {c} contract faces vs {dst_counts.get(i + j, 0)} lifted")
    return BijectionCheck(ok=not problems, mismatches=tuple(problems))


# =============================================================================
# Consecutive cancellation
# =============================================================================

@dataclass(frozen=True)
class MinimalBasis:
    """Surviving (hdeg, mdeg) multiset after cancellation, plus the surviving faces."""

    entries: Counter
    survivors: frozenset[int]
    cancellations: int

    def is_subcomplex_of(self, T: TaylorComplex) -> bool:
        """True iff every Taylor facet of a surviving face also survived."""
        return all(
            (mask ^ (1 << b)) in self.survivors
            for mask in self.survivors
            for b in members_of(mask)
        )


def _select_pivot(
    T: TaylorComplex,
    alive_by_hdeg: dict[int, set[int]],
    down: dict[int, dict[int, object]],
    rng: random.Random | None,
) -> tuple[int, int] | None:
    keys = T.keys
    for i in range(1, T.q + 1):
        candidates = []
        for theta in alive_by_hdeg[i]:
            kt = keys[theta]
            for pi in down[theta]:
                if keys[pi] == kt:
                    candidates.append((members_of(theta), members_of(pi), theta, pi))
        if candidates:
            candidates.sort()
            choice = candidates[0] if rng is None else rng.choice(candidates)
            return choice[2], choice[3]
    return None


def cancel_minimize(T: TaylorComplex, field: FieldSpec | None = None, order_seed: int = 0) -> MinimalBasis:
    """
    Minimize T by consecutive cancellations over the given field.

    Pivots: lowest homological degree first, then the lexicographically smallest
    (theta, pi) pair; a nonzero order_seed picks uniformly among that degree's
    candidates with random.Random(order_seed) instead.
    """
    field = field or FieldSpec.rationals()
    dom = field.domain
    rng = random.Random(order_seed) if order_seed else None

    # down[s][t] = scalar of [t] in d[s]; up[t][s] mirrors it.
    down: dict[int, dict[int, object]] = {mask: {} for mask in range(T.size)}
    up: dict[int, dict[int, object]] = {mask: {} for mask in range(T.size)}
    plus, minus = dom.convert(1), dom.convert(-1)
    for mask in range(1, T.size):
        for b in members_of(mask):
            facet = mask ^ (1 << b)
            s = plus if facet_sign(mask, b) > 0 else minus
            down[mask][facet] = s
            up[facet][mask] = s

    alive_by_hdeg = {i: set(T.faces_by_hdeg[i]) for i in range(T.q + 1)}
    steps = 0
    while True:
        pivot = _select_pivot(T, alive_by_hdeg, down, rng)
        if pivot is None:
            break
        theta, pi = pivot
        a = down[theta][pi]
        col = [(t, v) for t, v in down[theta].items() if t != pi]
        row = [(s, v) for s, v in up[pi].items() if s != theta]
        for sigma, b_pi_sigma in row:
            factor = dom.quo(b_pi_sigma, a)
            target = down[sigma]
            for tau, b_tau_theta in col:
                new = target.get(tau, dom.zero) - b_tau_theta * factor
                if dom.is_zero(new):
                    target.pop(tau, None)
                    up[tau].pop(sigma, None)
                else:
                    target[tau] = new
                    up[tau][sigma] = new
        for dead in (theta, pi):
            for t in down[dead]:
                up[t].pop(dead, None)
            for s in up[dead]:
                down[s].pop(dead, None)
            down[dead] = {}
            up[dead] = {}
            alive_by_hdeg[int(T.hdegs[dead])].discard(dead)
        steps += 1

    survivors = frozenset(m for faces in alive_by_hdeg.values() for m in faces)
    entries = Counter((int(T.hdegs[m]), T.mdeg(m)) for m in survivors)
    logging.debug("cancel_minimize: %s cancellations, %s survivors", steps, len(survivors))
    return MinimalBasis(entries=entries, survivors=survivors, cancellations=steps)


def differential_squares_to_zero(T: TaylorComplex) -> bool:
    """
    d o d = 0 checked entry by entry: for each face and each codimension-two
    subface, the two composite coefficients cancel.
    """
    for mask in range(T.size):
        if T.hdegs[mask] < 2:
            continue
        composite: dict[int, list[tuple[int, Monomial]]] = {}
        for facet, s1, c1 in T.boundary(mask):
            for sub, s2, c2 in T.boundary(facet):
                composite.setdefault(sub, []).append((s1 * s2, c1 * c2))
        for terms in composite.values():
            if len(terms) != 2:
                return False
            (sa, ca), (sb, cb) = terms
            if ca != cb or sa + sb != 0:
                return False
    return True
