# ---------------- utils/algebra/homology.py ----------------
"""
Ground-truth multigraded Betti numbers (the oracle).

Overview for future devs:
- Tensoring the Taylor complex with the residue field kills every entry whose
  monomial part is not 1. What is left splits into strands: for a multidegree l
  the l-strand has, in each homological degree, the faces with mdeg exactly l,
  and its boundary entries are the bare Taylor signs.
- beta_{i,l} = dim C_i - rank d_i - rank d_{i+1} on the l-strand.
- Ranks are exact: sympy DomainMatrix over QQ or GF(p). No floats, no modular
  shortcut when the field is Q.
- Strands are evaluated one after another in canonical multidegree order, so
  the table is identical run to run.

BettiTable is also the common currency of utils.betti_engine (all three methods
produce one) and of the JSON/text formatters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

import pandas as pd
from sympy.polys.matrices import DomainMatrix

from utils.algebra.fields import FieldSpec
from utils.algebra.ideals import MonomialIdeal
from utils.algebra.monomials import Monomial, divides, multiply, quotient
from utils.algebra.taylor import DEFAULT_FACE_CAP, TaylorComplex, build_taylor, facet_sign, members_of


# =============================================================================
# Betti tables
# =============================================================================

@dataclass(frozen=True)
class BettiTable:
    """
    Finite map (hdeg, mdeg) -> positive count over a field.

    Zero counts are never stored. An empty table is the zero module (S/S); its
    pd is reported as -1.
    """

    entries: Mapping[tuple[int, Monomial], int]
    field: FieldSpec
    n: int

    @classmethod
    def from_counter(cls, counts: Mapping[tuple[int, Monomial], int], field: FieldSpec, n: int) -> "BettiTable":
        clean = {k: int(v) for k, v in counts.items() if v}
        for (i, _), v in clean.items():
            if v < 0 or i < 0:
                raise ValueError(f"Negative Betti data at {(i, v)}")
        return cls(entries=dict(sorted(clean.items(), key=lambda kv: (kv[0][0], kv[0][1].exponents))), field=field, n=n)

    def get(self, hdeg: int, mdeg: Monomial) -> int:
        return self.entries.get((hdeg, mdeg), 0)

    def items(self) -> list[tuple[int, Monomial, int]]:
        return [(i, m, c) for (i, m), c in self.entries.items()]

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    @property
    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), c in self.entries.items():
            out[i] += c
        return out

    def multidegrees(self) -> set[Monomial]:
        return {m for _, m in self.entries}

    def total_at(self, mdeg: Monomial) -> int:
        """sum_k beta_{k, mdeg}"""
        return sum(c for (_, m), c in self.entries.items() if m == mdeg)

    def shifted(self, j: int, m: Monomial) -> Counter:
        """Entries moved to (i + j, l * m), as a Counter ready for summing."""
        return Counter({(i + j, multiply(l, m)): c for (i, l), c in self.entries.items()})

    def same_numbers(self, other: "BettiTable") -> bool:
        return dict(self.entries) == dict(other.entries)

    def to_frame(self, variables=None) -> pd.DataFrame:
        """One row per nonzero entry: hdeg, mdeg (exponent list or text), count."""
        from utils.algebra.schema import format_monomial

        rows = []
        for i, m, c in self.items():
            label = format_monomial(m, variables) if variables is not None else list(m.exponents)
            rows.append({"hdeg": i, "mdeg": label, "degree": m.degree, "count": c})
        return pd.DataFrame(rows, columns=["hdeg", "mdeg", "degree", "count"])

    def totals_frame(self) -> pd.DataFrame:
        """Betti diagram: rows = total degree, columns = homological degree."""
        df = self.to_frame()
        if df.empty:
            return pd.DataFrame()
        return (
            df.pivot_table(index="degree", columns="hdeg", values="count", aggfunc="sum", fill_value=0)
            .astype(int)
            .sort_index()
        )


# =============================================================================
# Exact rank
# =============================================================================

def rank(rows: Mapping[int, Mapping[int, object]], shape: tuple[int, int], field: FieldSpec) -> int:
    """Exact rank of a sparse matrix given as {row: {col: scalar}} over field."""
    if shape[0] == 0 or shape[1] == 0:
        return 0
    dom = field.domain
    clean = {
        r: {c: dom.convert(v) for c, v in cols.items() if not dom.is_zero(dom.convert(v))}
        for r, cols in rows.items()
    }
    clean = {r: cols for r, cols in clean.items() if cols}
    if not clean:
        return 0
    return int(DomainMatrix(clean, shape, dom).rank())


# =============================================================================
# Strands
# =============================================================================

@dataclass(frozen=True)
class StrandComplex:
    """
    The l-strand of a Taylor complex tensored with the field.

    basis[i] lists the faces (masks) of hdeg i with mdeg exactly l;
    boundaries[i] maps C_i -> C_{i-1} as {row: {col: +-1}} with rows indexing
    basis[i-1] and columns indexing basis[i].
    """

    multidegree: Monomial
    basis: dict[int, list[int]]
    boundaries: dict[int, dict[int, dict[int, int]]]

    def shape(self, i: int) -> tuple[int, int]:
        return len(self.basis.get(i - 1, [])), len(self.basis.get(i, []))

    def matrix(self, i: int, field: FieldSpec) -> DomainMatrix:
        dom = field.domain
        rows = {r: {c: dom.convert(v) for c, v in cols.items()} for r, cols in self.boundaries.get(i, {}).items()}
        return DomainMatrix(rows, self.shape(i), dom)

    def composes_to_zero(self, field: FieldSpec) -> bool:
        for i in self.boundaries:
            if i - 1 not in self.boundaries:
                continue
            a, b = self.shape(i - 1), self.shape(i)
            if 0 in a or 0 in b:
                continue
            if not self.matrix(i - 1, field).matmul(self.matrix(i, field)).is_zero_matrix:
                return False
        return True

    def betti(self, field: FieldSpec) -> dict[int, int]:
        ranks = {i: rank(self.boundaries.get(i, {}), self.shape(i), field) for i in self.basis}
        out = {}
        for i, faces in self.basis.items():
            b = len(faces) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if b:
                out[i] = b
        return out


def strand(T: TaylorComplex, l: Monomial) -> StrandComplex:
    """Build the l-strand of T."""
    masks = T.faces_by_mdeg.get(l.exponents, [])
    basis: dict[int, list[int]] = {}
    for mask in sorted(masks, key=lambda x: (int(T.hdegs[x]), members_of(x))):
        basis.setdefault(int(T.hdegs[mask]), []).append(mask)
    position = {mask: idx for faces in basis.values() for idx, mask in enumerate(faces)}
    boundaries: dict[int, dict[int, dict[int, int]]] = {}
    for i, faces in basis.items():
        if i == 0:
            continue
        mat: dict[int, dict[int, int]] = {}
        for col, mask in enumerate(faces):
            for b in members_of(mask):
                facet = mask ^ (1 << b)
                if T.keys[facet] == l.exponents:
                    mat.setdefault(position[facet], {})[col] = facet_sign(mask, b)
        boundaries[i] = mat
    return StrandComplex(multidegree=l, basis=basis, boundaries=boundaries)


def taylor_betti(T: TaylorComplex, field: FieldSpec) -> Counter:
    """Betti numbers from the strands of any Taylor complex (minimal or not)."""
    counts: Counter = Counter()
    for key in sorted(T.faces_by_mdeg, key=lambda k: (sum(k), k)):
        l = Monomial(key)
        for i, b in strand(T, l).betti(field).items():
            counts[(i, l)] = b
    return counts


# =============================================================================
# Oracle
# =============================================================================

def betti_oracle(M: MonomialIdeal, field: FieldSpec | None = None, cap: int = DEFAULT_FACE_CAP) -> BettiTable:
    """beta_{i,l}(S/M) by exact strand homology of the Taylor complex."""
    field = field or FieldSpec.rationals()
    if M.is_zero:
        return BettiTable.from_counter({(0, M.unit_monomial()): 1}, field, M.n)
    if M.is_unit:
        return BettiTable.from_counter({}, field, M.n)
    T = build_taylor(M.generators, n=M.n, cap=cap)
    return BettiTable.from_counter(taylor_betti(T, field), field, M.n)


def betti_of_sequence(gens: Iterable[Monomial], n: int, field: FieldSpec | None = None,
                      cap: int = DEFAULT_FACE_CAP) -> BettiTable:
    """Oracle on a possibly non-minimal generating sequence."""
    field = field or FieldSpec.rationals()
    T = build_taylor(list(gens), n=n, cap=cap)
    return BettiTable.from_counter(taylor_betti(T, field), field, n)


def lcm_lattice(M: MonomialIdeal, cap: int = DEFAULT_FACE_CAP) -> frozenset[Monomial]:
    """All subset lcms of the minimal generators, 1 included."""
    if M.is_zero:
        return frozenset({M.unit_monomial()})
    T = build_taylor(M.generators, n=M.n, cap=cap)
    return frozenset(Monomial(k) for k in T.faces_by_mdeg)


def face_counts(T: TaylorComplex) -> Counter:
    """Number of Taylor faces per (hdeg, mdeg)."""
    return Counter((int(T.hdegs[mask]), Monomial(key)) for mask, key in enumerate(T.keys))


def shifted_lookup(table: BettiTable, k: int, l: Monomial, j: int, m: Monomial) -> int:
    """beta_{k-j, l/m} of table, zero when m does not divide l or k < j."""
    if k < j or not divides(m, l):
        return 0
    return table.get(k - j, quotient(l, m))
