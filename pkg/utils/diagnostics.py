# utils/diagnostics.py
"""
Mismatch Diagnostic Protocol for tri-method verification.

When `verify` finds that decompose / oracle / cancel disagree on an ideal,
this module turns the MethodComparison into a plain-English narrative:
which method drifted, at which (hdeg, mdeg) entries, and the most likely
place to look.

Rules:
- No Streamlit imports. Pure Python, returns strings.
- The oracle is the reference; the other methods are judged against it.
- Multidegrees are printed as monomial text over the ideal's variables.
"""

from __future__ import annotations

from utils.algebra.decompose import second_decomposition
from utils.algebra.errors import AlgebraError
from utils.algebra.schema import format_monomial
from utils.betti_engine import MethodComparison

_MAX_LISTED = 8


# ─────────────────────────────────────────────────────────────────────────────
# Entry listing
# ─────────────────────────────────────────────────────────────────────────────

def _entry_lines(cmp: MethodComparison, diff: dict) -> list[str]:
    variables = cmp.ideal.variables
    keys = sorted(diff, key=lambda k: (k[0], k[1].exponents))
    lines = []
    for i, l in keys[:_MAX_LISTED]:
        got, want = diff[(i, l)]
        lines.append(f"    beta_{{{i}, {format_monomial(l, variables)}}}: got {got}, oracle {want}")
    if len(keys) > _MAX_LISTED:
        lines.append(f"    ... and {len(keys) - _MAX_LISTED} more")
    return lines


# ─────────────────────────────────────────────────────────────────────────────
# Narrative layer
# ─────────────────────────────────────────────────────────────────────────────

def _likely_cause(method: str, cmp: MethodComparison) -> str:
    if method == "cancel":
        return (
            "Likely cause: the cancellation update. Every surviving entry should keep "
            "its multidegree; compare the survivor multiset for two order seeds."
        )
    try:
        tree = second_decomposition(cmp.ideal)
    except AlgebraError as e:
        return f"Likely cause: the decomposition itself failed ({e})."
    kinds = dict(tree.kind_counts())
    if kinds.get("purely_nondominant"):
        return (
            f"Likely cause: shift bookkeeping. The tree has leaves {kinds}; the purely "
            "nondominant ones are computed by the oracle, so check the accumulated (j, m) first."
        )
    return (
        f"Likely cause: a dominant leaf or a contract. All leaves are {kinds}; check that each "
        "contract was re-minimalized and that every dominant leaf really is dominant."
    )


def build_narrative(cmp: MethodComparison) -> str:
    """
    Interprets a MethodComparison and returns a plain-text report.

    Returns a one-line confirmation when all methods agree.
    """
    methods = ", ".join(cmp.tables)
    if cmp.agree:
        ref = next(iter(cmp.tables.values()))
        return f"All methods ({methods}) agree on {cmp.ideal} over {cmp.field}: totals {ref.totals}."

    lines = [f"Methods disagree on {cmp.ideal} over {cmp.field}."]
    if "oracle" not in cmp.tables:
        for name, t in cmp.tables.items():
            lines.append(f"  {name}: totals {t.totals}")
        lines.append("Re-run with the oracle included to locate the drift.")
        return "\n".join(lines)

    oracle = cmp.tables["oracle"]
    lines.append(f"  oracle: totals {oracle.totals}, pd {oracle.pd}")
    for name, diff in cmp.disagreements("oracle").items():
        t = cmp.tables[name]
        lines.append(f"  {name}: totals {t.totals}, pd {t.pd}, {len(diff)} differing entries")
        lines.extend(_entry_lines(cmp, diff))
        lines.append(f"  {_likely_cause(name, cmp)}")
    return "\n".join(lines)
