# ------------- conjecture_lab.py ----------------
"""
Conjecture Lab

Overview for future devs:
- Fuzz tab: seeded counterexample search for C1 / C2 / C3 with the random
  ideal bounds from the form. Every candidate is re-checked against the oracle
  before it is listed.
- Suites tab: the acceptance suites at a user-chosen scale.
- Forms keep reruns down: nothing runs until the submit button is pressed.
"""

import streamlit as st
import pandas as pd

from utils.algebra import formatters as fmt
from utils.algebra.errors import AlgebraError
from utils.algebra.fields import FieldSpec
from utils.conjecture_fuzz import CONJECTURE_STATEMENTS, CONJECTURES, FuzzParams, all_suites, conjecture_fuzz


def _fuzz_tab():
    with st.form("fuzz_form"):
        which = st.selectbox(
            "Conjecture",
            CONJECTURES,
            format_func=lambda c: f"{c}: {CONJECTURE_STATEMENTS[c]}",
        )
        c1, c2, c3, c4 = st.columns(4)
        n_vars = c1.number_input("Variables (max)", 2, 8, 4)
        n_gens = c2.number_input("Generators drawn", 2, 12, 6)
        max_exp = c3.number_input("Max exponent", 1, 9, 4)
        budget = c4.number_input("Budget", 1, 2000, 50)
        seed = st.number_input("Seed", 0, 10**9, 0)
        prime = st.checkbox("Work over F2 instead of Q")
        submitted = st.form_submit_button("Search")

    if not submitted:
        return
    field = FieldSpec.prime(2) if prime else FieldSpec.rationals()
    try:
        params = FuzzParams(vars=int(n_vars), gens=int(n_gens), max_exp=int(max_exp))
        with st.spinner(f"Testing {budget} instances of {which}..."):
            report = conjecture_fuzz(
                which, params, budget=int(budget), seed=int(seed),
                field=field, cap=int(st.session_state.get("max_gens", 20)),
            )
    except AlgebraError as e:
        st.error(f"❌ {e}")
        return

    if report.counterexamples:
        st.error(report.summary)
    else:
        st.success(report.summary)
    if report.method_mismatches:
        st.warning(f"Method mismatches at seeds {report.method_mismatches}; see the log.")
    if report.exhibits:
        st.caption(f"Cancellation survivors were not a Taylor subcomplex at seeds {report.exhibits}.")

    for c in report.counterexamples:
        with st.expander(f"seed {c.seed}: {c.ideal}"):
            st.dataframe(c.table.to_frame(c.ideal.variables), hide_index=True, width="stretch")
    st.download_button(
        "Download report (JSON)",
        data=fmt.dumps(fmt.fuzz_report_to_json(report)),
        file_name=f"fuzz_{which}_seed{int(seed)}.json",
        mime="application/json",
    )


def _suites_tab():
    with st.form("suite_form"):
        scale = st.slider("Scale (fraction of the default sizes)", 0.01, 1.0, 0.05)
        seed = st.number_input("Seed", 0, 10**9, 0, key="suite_seed")
        submitted = st.form_submit_button("Run suites")
    if not submitted:
        return
    with st.spinner("Running acceptance suites..."):
        results = all_suites(seed=int(seed), scale=float(scale))
    df = pd.DataFrame([
        {"suite": r.name, "tested": r.tested, "failures": len(r.failures), "ok": r.ok}
        for r in results
    ])
    st.dataframe(df, hide_index=True, width="stretch")
    for r in results:
        if not r.ok:
            with st.expander(f"{r.name}: {len(r.failures)} failures"):
                st.code("\n".join(r.failures[:50]), language=None)


def render():
    st.title("Conjecture Lab")
    t1, t2 = st.tabs(["🔎  Counterexample search", "✅  Acceptance suites"])
    with t1:
        _fuzz_tab()
    with t2:
        _suites_tab()
