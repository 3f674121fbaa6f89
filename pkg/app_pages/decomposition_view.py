# ------------- decomposition_view.py ----------------
"""
Decompositions

Overview for future devs:
- One-level views: first decomposition (all dominant generators at once) and
  the single-pivot decomposition, each with the shift set C and the rebuilt
  table from shifted oracle tables.
- Recursive view: second decomposition tree as graphviz plus a leaf table.
"""

import streamlit as st
import pandas as pd

from utils.algebra import formatters as fmt
from utils.algebra.decompose import (
    build_C,
    decomposition_table,
    first_decomposition,
    second_decomposition,
    third_decomposition,
)
from utils.algebra.errors import AlgebraError
from utils.algebra.homology import betti_oracle
from utils.algebra.ideals import classify
from utils.algebra.schema import format_monomial
from utils.ui_helpers import render_engine_controls, render_ideal_input


def _terms_frame(terms) -> pd.DataFrame:
    return pd.DataFrame([
        {
            "j": t.j,
            "m": format_monomial(t.m, t.ideal.variables),
            "contract": t.ideal.generators_text(),
            "unit": t.ideal.is_unit,
        }
        for t in terms
    ])


def _identity_panel(M, terms, field):
    cap = int(st.session_state.get("max_gens", 20))
    try:
        rebuilt = decomposition_table(terms, M.n, field, cap=cap)
        direct = betti_oracle(M, field, cap=cap)
    except AlgebraError as e:
        st.warning(f"⚠️ {e}")
        return
    if rebuilt.table.same_numbers(direct):
        st.success(f"The shifted sum reproduces beta(S/M): totals {tuple(direct.totals)}")
    else:
        st.error(f"Shifted sum {tuple(rebuilt.table.totals)} differs from the oracle {tuple(direct.totals)}")
    if not rebuilt.unique_contributors:
        st.caption("Some entries receive contributions from more than one term.")


def _first_tab(M, field):
    report = classify(M)
    shifts = build_C(M, len(report.dominant_indices()))
    if shifts.has_collisions:
        st.warning("Two subsets of dominant generators share an lcm; C lists each shift once.")
    terms = first_decomposition(M)
    st.dataframe(_terms_frame(terms), hide_index=True, width="stretch")
    _identity_panel(M, terms, field)


def _pivot_tab(M, field):
    report = classify(M)
    dominant = report.dominant_indices()
    labels = [format_monomial(M.generators[i], M.variables) for i in dominant]
    choice = st.selectbox("Pivot generator", labels, key="decomp_pivot")
    terms = third_decomposition(M, pivot=dominant[labels.index(choice)])
    st.dataframe(_terms_frame(terms), hide_index=True, width="stretch")
    _identity_panel(M, terms, field)


def _tree_tab(M):
    tree = second_decomposition(M)
    c1, c2 = st.columns(2)
    c1.metric("Depth", tree.depth())
    c2.metric("Leaves", sum(tree.kind_counts().values()))
    st.graphviz_chart(fmt.tree_to_dot(tree))

    rows = [
        {
            "j": leaf.shift_j,
            "m": format_monomial(leaf.shift_m, M.variables),
            "leaf": leaf.ideal.generators_text(),
            "kind": leaf.kind,
        }
        for leaf in tree.leaves()
    ]
    st.dataframe(pd.DataFrame(rows), hide_index=True, width="stretch")
    with st.expander("Tree as JSON"):
        st.json(fmt.tree_to_json(tree))


def render():
    st.title("Decompositions")
    M = render_ideal_input("decomp")
    if M is None:
        return
    _, field = render_engine_controls("decomp")

    if not M.is_proper:
        st.info("Decompositions need a proper nonzero ideal.")
        return
    report = classify(M)
    if report.is_purely_nondominant:
        st.info("This ideal is purely nondominant; it is its own leaf and only the oracle applies.")
        return

    t1, t2, t3 = st.tabs(["1️⃣  First", "🎯  Single pivot", "🌳  Recursive tree"])
    try:
        with t1:
            _first_tab(M, field)
        with t2:
            _pivot_tab(M, field)
        with t3:
            _tree_tab(M)
    except AlgebraError as e:
        st.error(f"❌ {e}")
