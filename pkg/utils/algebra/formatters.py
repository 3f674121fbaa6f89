# ---------------- utils/algebra/formatters.py ----------------
"""
Algebra Formatters

Overview for future devs:
- Turns engine results into the three output formats the CLI offers:
    * text: human readable, multidegrees as monomial text
    * json: machine readable, multidegrees as exponent arrays, fixed key order
    * dot:  graphviz source for decomposition trees and strand posets
- JSON documents are built as plain dicts here and serialized with
  json.dumps(indent=2) by dumps(); key order is insertion order, so the
  schemas below are reproduced byte for byte.

Schemas:
- BettiTable:  {"field", "pd", "totals", "entries": [{"hdeg", "mdeg", "count"}]}
- Tree node:   {"j", "m", "ideal", "kind", "children"}
- Fuzz report: {"conjecture", "tested", "counterexamples": [{"seed", "ideal", "betti"}]}
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any, Iterable

from utils.algebra.decompose import DecompositionTree, ShiftedIdeal
from utils.algebra.homology import BettiTable
from utils.algebra.ideals import DominanceReport, MonomialIdeal
from utils.algebra.monomials import Monomial, VariableSet
from utils.algebra.schema import format_monomial
from utils.algebra.taylor import Face, TaylorComplex, facet_sign, members_of

if TYPE_CHECKING:
    from utils.conjecture_fuzz import FuzzReport, SuiteResult


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2)


def _ideal_rows(M: MonomialIdeal) -> list[list[int]]:
    return [list(g.exponents) for g in M.generators]


def _face_label(members: Iterable[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in members) + "}"


# =============================================================================
# Betti tables
# =============================================================================

def betti_to_json(table: BettiTable) -> dict[str, Any]:
    return {
        "field": str(table.field),
        "pd": table.pd,
        "totals": table.totals,
        "entries": [{"hdeg": i, "mdeg": list(l.exponents), "count": c} for i, l, c in table.items()],
    }


def betti_to_text(table: BettiTable, variables: VariableSet) -> str:
    lines = [f"field {table.field}   pd {table.pd}   totals {tuple(table.totals)}"]
    for i, l, c in table.items():
        lines.append(f"beta_{{{i}, {format_monomial(l, variables)}}} = {c}")
    return "\n".join(lines)


def betti_diagram_text(table: BettiTable) -> str:
    """Classic total-degree Betti diagram (rows: total degree, columns: hdeg)."""
    frame = table.totals_frame()
    if frame.empty:
        return "(zero module)"
    return frame.to_string()


# =============================================================================
# Dominance
# =============================================================================

def dominance_to_json(M: MonomialIdeal, report: DominanceReport) -> dict[str, Any]:
    return {
        "variables": list(M.variables.names),
        "class": report.class_label,
        "p": report.p,
        "generators": [
            {
                "mdeg": list(g.exponents),
                "dominant": d.is_dominant,
                "witness": None if d.witness_variable is None else M.variables.names[d.witness_variable],
            }
            for g, d in zip(M.generators, report.per_generator)
        ],
    }


def dominance_to_text(M: MonomialIdeal, report: DominanceReport) -> str:
    lines = [f"{M}: {report.class_label} (p = {report.p}, q = {report.q})"]
    for g, d in zip(M.generators, report.per_generator):
        text = format_monomial(g, M.variables)
        if d.is_dominant:
            lines.append(f"  {text}  dominant in {M.variables.names[d.witness_variable]}")
        else:
            lines.append(f"  {text}  nondominant")
    return "\n".join(lines)


# =============================================================================
# Decompositions
# =============================================================================

def tree_to_json(tree: DecompositionTree) -> dict[str, Any]:
    """Nested node objects; j and m are the local shift relative to the parent."""
    return {
        "j": tree.term.j,
        "m": list(tree.term.m.exponents),
        "ideal": _ideal_rows(tree.ideal),
        "kind": tree.kind,
        "children": [tree_to_json(c) for c in tree.children],
    }


def tree_to_text(tree: DecompositionTree, indent: int = 0) -> str:
    variables = tree.ideal.variables
    pad = "  " * indent
    shift = f"(j={tree.term.j}, m={format_monomial(tree.term.m, variables)})"
    lines = [f"{pad}{shift} ({tree.ideal.generators_text()})  [{tree.kind}]"]
    for child in tree.children:
        lines.append(tree_to_text(child, indent + 1))
    return "\n".join(lines)


def leaves_to_text(tree: DecompositionTree) -> str:
    """The flattened sum: one beta_{k-j, l/m}(S/leaf) term per non-unit leaf."""
    variables = tree.ideal.variables
    terms = []
    for leaf in tree.leaves():
        if leaf.kind == "unit":
            continue
        m = format_monomial(leaf.shift_m, variables)
        terms.append(f"beta_{{k-{leaf.shift_j}, l/{m}}}(S/({leaf.ideal.generators_text()}))  [{leaf.kind}]")
    return "\n".join(terms) if terms else "(no contributing leaves)"


def terms_to_text(terms: Iterable[ShiftedIdeal]) -> str:
    lines = []
    for t in terms:
        lines.append(f"(j={t.j}, m={format_monomial(t.m, t.ideal.variables)})  ({t.ideal.generators_text()})")
    return "\n".join(lines)


def terms_to_json(terms: Iterable[ShiftedIdeal]) -> list[dict[str, Any]]:
    return [{"j": t.j, "m": list(t.m.exponents), "ideal": _ideal_rows(t.ideal)} for t in terms]


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def tree_to_dot(tree: DecompositionTree) -> str:
    variables = tree.ideal.variables
    lines = ["digraph decomposition {", "  node [shape=box, fontname=monospace];"]
    counter = [0]
    colors = {"dominant": "palegreen", "purely_nondominant": "lightsalmon", "unit": "lightgrey", "internal": "white"}

    def walk(node: DecompositionTree) -> str:
        name = f"n{counter[0]}"
        counter[0] += 1
        label = _dot_escape(f"({node.ideal.generators_text()})\\n{node.kind}")
        lines.append(f'  {name} [label="{label}", style=filled, fillcolor={colors[node.kind]}];')
        for child in node.children:
            child_name = walk(child)
            edge = _dot_escape(f"j={child.term.j}, m={format_monomial(child.term.m, variables)}")
            lines.append(f'  {name} -> {child_name} [label="{edge}"];')
        return name

    walk(tree)
    lines.append("}")
    return "\n".join(lines)


# =============================================================================
# Faces
# =============================================================================

def faces_to_text(faces: Iterable[Face], variables: VariableSet) -> str:
    return "\n".join(
        f"{f.hdeg}  {_face_label(f.indices)}:{format_monomial(f.mdeg, variables)}" for f in faces
    )


def faces_to_json(faces: Iterable[Face]) -> list[dict[str, Any]]:
    return [{"members": list(f.indices), "hdeg": f.hdeg, "mdeg": list(f.mdeg.exponents)} for f in faces]


def strand_to_dot(T: TaylorComplex, l: Monomial, variables: VariableSet) -> str:
    """Faces of multidegree exactly l, with signed facet edges between them."""
    masks = sorted(T.faces_by_mdeg.get(l.exponents, []), key=lambda x: (int(T.hdegs[x]), members_of(x)))
    text = format_monomial(l, variables)
    lines = [f'digraph "strand {_dot_escape(text)}" {{', "  rankdir=BT;", "  node [shape=ellipse, fontname=monospace];"]
    present = set(masks)
    for mask in masks:
        lines.append(f'  f{mask} [label="{_dot_escape(_face_label(members_of(mask)) + ":" + text)}"];')
    for mask in masks:
        for b in members_of(mask):
            facet = mask ^ (1 << b)
            if facet in present:
                sign = "+" if facet_sign(mask, b) > 0 else "-"
                lines.append(f'  f{mask} -> f{facet} [label="{sign}"];')
    lines.append("}")
    return "\n".join(lines)


# =============================================================================
# Reports
# =============================================================================

def fuzz_report_to_json(report: "FuzzReport") -> dict[str, Any]:
    return {
        "conjecture": report.conjecture,
        "tested": report.tested,
        "counterexamples": [
            {"seed": c.seed, "ideal": _ideal_rows(c.ideal), "betti": betti_to_json(c.table)}
            for c in report.counterexamples
        ],
    }


def fuzz_report_to_text(report: "FuzzReport") -> str:
    lines = [report.summary]
    for c in report.counterexamples:
        lines.append(f"  seed {c.seed}: {c.ideal}")
        lines.append("    " + betti_to_text(c.table, c.ideal.variables).replace("\n", "\n    "))
    if report.skipped:
        lines.append(f"  skipped seeds (no instance drawn): {report.skipped}")
    if report.exhibits:
        lines.append(f"  non-subcomplex cancellation survivors at seeds: {report.exhibits}")
    return "\n".join(lines)


def suite_to_json(result: "SuiteResult") -> dict[str, Any]:
    return {"suite": result.name, "tested": result.tested, "failures": list(result.failures)}


def suite_to_text(result: "SuiteResult") -> str:
    status = "ok" if result.ok else f"{len(result.failures)} FAILURES"
    lines = [f"{result.name}: {result.tested} tested, {status}"]
    lines.extend(f"  {f}" for f in result.failures[:20])
    return "\n".join(lines)
