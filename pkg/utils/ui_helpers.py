import streamlit as st
import pandas as pd
import altair as alt

from io import BytesIO

from utils.algebra.errors import AlgebraError
from utils.algebra.fields import FieldSpec
from utils.algebra.homology import BettiTable
from utils.algebra.ideals import MonomialIdeal, load_ideal
from utils.betti_engine import METHODS

"""
Shared UI helpers (Betti Lab)

Overview for future devs:
- Every page reads its ideal through render_ideal_input(), so the sidebar
  example picker, the text box and file upload all behave the same way.
- The parsed ideal and its text are kept in st.session_state["ideal_text"]
  so switching pages keeps the current ideal.
- Charts are Altair, downloads are openpyxl workbooks built in memory.
"""

EXAMPLE_IDEALS = {
    "Seven generators in a,b,c,d": "a^3*b^2, c^3*d, a*c^2, a^2*c, b^2*d, a*b*c, b*c*d",
    "Triangle (ab, bc, ac)": "a*b, b*c, a*c",
    "Purely nondominant": "a^2*b*c, b^2*c^2, a^2*b^2, a*b*c^2",
    "Artinian in x1..x5": "x1^3, x1*x2, x1*x3, x1*x4, x1*x5, x2*x4, x3*x5, x2^2, x3^2, x4^2, x5^2",
    "Real projective plane": "a*b*c, a*b*d, a*c*e, a*d*f, a*e*f, b*c*f, b*d*e, b*e*f, c*d*e, c*d*f",
}

XLSX_MIME = "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet"


def render_ideal_input(key: str = "ideal") -> MonomialIdeal | None:
    """Text area (seeded from the example picker) plus optional upload. Returns None on parse errors."""
    example = st.selectbox(
        "Start from an example",
        [""] + list(EXAMPLE_IDEALS),
        key=f"{key}_example",
    )
    default = EXAMPLE_IDEALS.get(example) or st.session_state.get("ideal_text", EXAMPLE_IDEALS["Triangle (ab, bc, ac)"])

    text = st.text_area(
        "Generators (comma separated, e.g. x^2*y, y*z^3, or the JSON form)",
        value=default,
        height=90,
        key=f"{key}_text_{example}",
    )
    uploaded = st.file_uploader("...or upload a generator file (text or JSON)", type=["txt", "json"], key=f"{key}_upload")
    if uploaded is not None:
        text = uploaded.getvalue().decode("utf-8")

    try:
        M = load_ideal(text)
    except AlgebraError as e:
        st.error(f"❌ {e}")
        return None

    st.session_state["ideal_text"] = text
    st.caption(f"Minimal generators: {M.generators_text()}   ·   n = {M.n}, q = {M.q}")
    return M


def render_engine_controls(key: str = "engine") -> tuple[str, FieldSpec]:
    """Method and field pickers side by side."""
    c1, c2 = st.columns(2)
    with c1:
        method = st.selectbox("Method", METHODS, key=f"{key}_method")
    with c2:
        field_text = st.text_input("Field (Q or Fp:<prime>)", value="Q", key=f"{key}_field")
    try:
        field = FieldSpec.parse(field_text)
    except AlgebraError as e:
        st.warning(f"{e}; using Q")
        field = FieldSpec.rationals()
    return method, field


def render_betti_diagram(table: BettiTable) -> None:
    """Heatmap of the total-degree Betti diagram."""
    frame = table.totals_frame()
    if frame.empty:
        st.info("S/S is the zero module; there is nothing to draw.")
        return
    long = frame.reset_index().melt(id_vars="degree", var_name="hdeg", value_name="count")
    long = long[long["count"] > 0]
    heat = (
        alt.Chart(long, background="#FFFFFF")
        .mark_rect()
        .encode(
            x=alt.X("hdeg:O", title="Homological degree"),
            y=alt.Y("degree:O", title="Total degree", sort="descending"),
            color=alt.Color("count:Q", scale=alt.Scale(scheme="blues")),
            tooltip=["hdeg", "degree", "count"],
        )
    )
    labels = heat.mark_text(color="#1E293B").encode(text="count:Q")
    st.altair_chart((heat + labels).properties(height=260), width="stretch")


def workbook_bytes(sheets: dict[str, pd.DataFrame]) -> BytesIO:
    output = BytesIO()
    with pd.ExcelWriter(output, engine="openpyxl") as writer:
        for name, df in sheets.items():
            df.to_excel(writer, index=False, sheet_name=name[:31])
    output.seek(0)
    return output


def download_workbook(sheets: dict[str, pd.DataFrame], filename: str, label: str = "Download workbook") -> None:
    st.download_button(
        label=label,
        data=workbook_bytes(sheets),
        file_name=filename,
        mime=XLSX_MIME,
    )
