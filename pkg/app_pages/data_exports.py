# app_pages/data_exports.py

import streamlit as st
import pandas as pd

from utils.algebra import formatters as fmt
from utils.algebra.decompose import second_decomposition
from utils.algebra.errors import AlgebraError
from utils.algebra.schema import format_monomial, generators_to_json
from utils.algebra.taylor import build_taylor
from utils.betti_engine import betti
from utils.ui_helpers import download_workbook, render_engine_controls, render_ideal_input


def _faces_frame(M, cap: int) -> pd.DataFrame:
    T = build_taylor(M.generators, n=M.n, cap=cap)
    return pd.DataFrame([
        {"members": str([i + 1 for i in f.indices]), "hdeg": f.hdeg, "mdeg": format_monomial(f.mdeg, M.variables)}
        for f in T.faces()
    ])


def _leaves_frame(M) -> pd.DataFrame:
    tree = second_decomposition(M)
    return pd.DataFrame([
        {"j": leaf.shift_j, "m": format_monomial(leaf.shift_m, M.variables), "leaf": leaf.ideal.generators_text(), "kind": leaf.kind}
        for leaf in tree.leaves()
    ])


def render():
    st.title("Data Exports")
    st.markdown("Download the Betti table, Taylor faces and decomposition leaves of an ideal.")

    M = render_ideal_input("exports")
    if M is None:
        return
    method, field = render_engine_controls("exports")
    include_faces = st.checkbox("Include every Taylor face")
    include_tree = st.checkbox("Include decomposition leaves", value=True)

    if st.button("Export Data"):
        cap = int(st.session_state.get("max_gens", 20))
        with st.spinner("Computing and preparing data..."):
            try:
                table = betti(M, method, field, cap=cap)
                sheets = {
                    "Betti": table.to_frame(M.variables),
                    "Diagram": table.totals_frame().reset_index(),
                }
                if include_faces:
                    sheets["Faces"] = _faces_frame(M, cap)
                if include_tree and M.is_proper:
                    try:
                        sheets["Leaves"] = _leaves_frame(M)
                    except AlgebraError as e:
                        st.info(f"No decomposition exported: {e}")
            except AlgebraError as e:
                st.error(f"❌ {e}")
                return

        st.download_button(
            label="Download Betti table (JSON)",
            data=fmt.dumps({"ideal": generators_to_json(M.generators, M.variables), "betti": fmt.betti_to_json(table)}),
            file_name="betti.json",
            mime="application/json",
        )
        download_workbook(sheets, f"betti_{method}_{str(field).replace(':', '')}.xlsx", label="Download Excel workbook")
