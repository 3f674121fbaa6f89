# ------------- home.py ----------------
"""
Home Page (Betti Lab)

Overview for future devs:
- Quick classification card for the current ideal: dominance class, p and q,
  Artinian / almost generic flags and which pd criteria apply.
- Everything heavier lives on the Explorer and Decompositions pages.
"""

import streamlit as st
import pandas as pd

from utils.algebra.ideals import (
    classify,
    is_almost_generic,
    is_artinian,
    pair_lcm_divisor,
    pd2_hypothesis,
    pdn_hypothesis,
)
from utils.algebra.schema import format_monomial
from utils.ui_helpers import render_ideal_input


def _generator_frame(M, report) -> pd.DataFrame:
    rows = []
    for g, d in zip(M.generators, report.per_generator):
        rows.append({
            "generator": format_monomial(g, M.variables),
            "degree": g.degree,
            "dominant": d.is_dominant,
            "witness variable": "" if d.witness_variable is None else M.variables.names[d.witness_variable],
        })
    return pd.DataFrame(rows)


def render():
    st.title("Betti Lab")
    st.markdown(
        "Exact multigraded Betti numbers of monomial ideals, computed three ways "
        "(structural decomposition, Taylor strand homology, consecutive cancellation)."
    )

    M = render_ideal_input("home")
    if M is None:
        return
    if not M.is_proper:
        st.info("The zero ideal and the unit ideal have no generators to classify.")
        return

    report = classify(M)
    artinian, _ = is_artinian(M)
    almost_generic, _ = is_almost_generic(M)

    c1, c2, c3, c4 = st.columns(4)
    c1.metric("Class", report.class_label)
    c2.metric("Dominant (p)", report.p)
    c3.metric("Generators (q)", report.q)
    c4.metric("Variables (n)", M.n)

    st.dataframe(_generator_frame(M, report), hide_index=True, width="stretch")

    st.subheader("Applicable criteria")
    pivot = pdn_hypothesis(M)
    divisor = pair_lcm_divisor(M)
    pd2_note = ""
    if divisor is not None:
        pd2_note = f" (generator {format_monomial(M.generators[divisor], M.variables)} divides every pair lcm)"
    pdn_note = "" if pivot is None else f" (pivot variable {M.variables.names[pivot]})"
    st.markdown(
        f"- Artinian: **{artinian}**\n"
        f"- Almost generic: **{almost_generic}**\n"
        f"- pd = 2 criterion (p in {{2, 3}} with a dividing pair lcm): **{M.q >= 2 and pd2_hypothesis(M)}**{pd2_note}\n"
        f"- pd = n criterion: **{pivot is not None}**{pdn_note}\n"
    )
