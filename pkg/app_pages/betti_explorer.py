# ------------- betti_explorer.py ----------------
"""
Betti Explorer

Overview for future devs:
- Tabs: Betti table | Method check | Characteristic | Scarf & strands.
- The face cap is st.session_state["max_gens"]; ResourceCapError is shown as
  a warning rather than a traceback.
- Tables are recomputed on every rerun; nothing is cached across edits.
"""

import streamlit as st
import pandas as pd

from utils.algebra import formatters as fmt
from utils.algebra.errors import AlgebraError, ResourceCapError
from utils.algebra.schema import format_monomial, parse_monomial
from utils.algebra.taylor import build_scarf, build_taylor
from utils.betti_engine import (
    METHODS,
    artinian_check,
    betti,
    characteristic_check,
    is_scarf,
    min_hdeg_check,
    no_nondominant_part_check,
    pd2_check,
    pdn_check,
    verify_methods,
)
from utils.diagnostics import build_narrative
from utils.ui_helpers import render_betti_diagram, render_engine_controls, render_ideal_input


def _cap() -> int:
    return int(st.session_state.get("max_gens", 20))


def _betti_tab(M, method, field):
    try:
        table = betti(M, method, field, cap=_cap())
    except ResourceCapError as e:
        st.warning(f"⚠️ {e}")
        return
    st.markdown(f"**pd = {table.pd}**   ·   totals {tuple(table.totals)}   ·   field {table.field}")
    left, right = st.columns([3, 2])
    with left:
        st.dataframe(table.to_frame(M.variables), hide_index=True, width="stretch")
    with right:
        render_betti_diagram(table)
    st.session_state["last_table"] = table


def _method_tab(M, field):
    seed = st.number_input("Cancellation order seed", min_value=0, value=0, step=1, key="explorer_seed")
    if not st.button("Compare all methods", key="explorer_compare"):
        return
    with st.spinner("Computing with decompose, oracle and cancel..."):
        try:
            cmp = verify_methods(M, field, METHODS, cap=_cap(), order_seed=int(seed))
        except ResourceCapError as e:
            st.warning(f"⚠️ {e}")
            return
    if cmp.agree:
        st.success(build_narrative(cmp))
    else:
        st.error("Methods disagree")
        st.code(build_narrative(cmp), language=None)
    totals = pd.DataFrame(
        [{"method": name, "pd": t.pd, "totals": str(tuple(t.totals))} for name, t in cmp.tables.items()]
    )
    st.dataframe(totals, hide_index=True, width="stretch")


def _characteristic_tab(M, method, field):
    if not M.is_proper:
        st.info("Characteristic Betti numbers are defined for proper nonzero ideals.")
        return
    try:
        table = betti(M, method, field, cap=_cap())
        report = characteristic_check(M, table, cap=_cap())
        checks = [
            pd2_check(M, table),
            pdn_check(M, table),
            artinian_check(M, table),
            no_nondominant_part_check(M, table),
            min_hdeg_check(M, table),
        ]
    except AlgebraError as e:
        st.warning(f"⚠️ {e}")
        return

    c1, c2 = st.columns(2)
    c1.metric("Characteristic", "yes" if report.is_characteristic else "no")
    c2.metric("Minimal homological degrees", "yes" if report.min_hdeg_ok else "no")

    rows = [
        {
            "multidegree": format_monomial(l, M.variables),
            "odd face count": l in report.L,
            "f(l)": f,
            "beta at f(l)": table.get(f, l),
            "total": table.total_at(l),
        }
        for l, f in sorted(report.f_values.items(), key=lambda kv: kv[0].sort_key())
    ]
    st.dataframe(pd.DataFrame(rows), hide_index=True, width="stretch")

    st.subheader("Criteria")
    for c in checks:
        if not c.applies:
            st.caption(f"{c.name}: hypothesis does not hold")
        elif c.holds:
            st.success(f"{c.name}: holds  {c.detail}")
        else:
            st.error(f"{c.name}: FAILS  {c.detail}")


def _scarf_tab(M):
    try:
        T = build_taylor(M.generators, n=M.n, cap=_cap())
    except ResourceCapError as e:
        st.warning(f"⚠️ {e}")
        return
    faces = build_scarf(T)
    st.markdown(
        f"{len(faces)} Scarf faces out of {T.size} Taylor faces. "
        f"The Scarf complex is {'**minimal**' if is_scarf(M, cap=_cap()) else '**not** minimal'} here."
    )
    st.dataframe(
        pd.DataFrame(fmt.faces_to_json(faces)).assign(
            mdeg=[format_monomial(f.mdeg, M.variables) for f in faces]
        ) if faces else pd.DataFrame(),
        hide_index=True,
        width="stretch",
    )

    st.subheader("Strand poset")
    text = st.text_input("Multidegree", value=format_monomial(T.mdeg(T.size - 1), M.variables) if T.size > 1 else "")
    if not text:
        return
    try:
        l = parse_monomial(text, M.variables)
    except AlgebraError as e:
        st.error(f"❌ {e}")
        return
    if not T.faces_with_mdeg(l):
        st.info("No Taylor face has this multidegree.")
        return
    st.graphviz_chart(fmt.strand_to_dot(T, l, M.variables))


def render():
    st.title("Betti Explorer")
    M = render_ideal_input("explorer")
    if M is None:
        return
    method, field = render_engine_controls("explorer")

    t1, t2, t3, t4 = st.tabs([
        "📊  Betti table",
        "🔁  Method check",
        "🧮  Characteristic",
        "🔺  Scarf & strands",
    ])
    with t1:
        _betti_tab(M, method, field)
    with t2:
        _method_tab(M, field)
    with t3:
        _characteristic_tab(M, method, field)
    with t4:
        _scarf_tab(M)
