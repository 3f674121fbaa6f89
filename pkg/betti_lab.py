# ------------------ betti_lab.py -------------------
"""
Betti Lab - Streamlit App Entrypoint

Overview for devs:
- Sidebar section nav (nav.navigation_bar), one page module per section.
- All computation goes through utils.betti_engine / utils.algebra; pages only
  collect input and render results.
- The face cap comes from RunConfig (BETTI_MAX_GENS / .env) and is stored in
  st.session_state["max_gens"] so every page applies the same limit.

Run with:  streamlit run betti_lab.py
"""

import importlib
import os

import streamlit as st
from dotenv import load_dotenv

from nav.navigation_bar import NAV_SECTIONS, render_sidebar_navigation
from utils.algebra.errors import AlgebraError
from utils.run_config import configure_logging, load_run_config, read_version

# Load .env file
load_dotenv(override=False)

APP_ENV = os.getenv("APP_ENV", "local")
APP_VERSION = read_version()


# ---------------- Page Config ----------------
# IMPORTANT: set_page_config must be the FIRST Streamlit call.
st.set_page_config(
    page_title="Betti Lab",
    page_icon="",
    layout="wide",
    initial_sidebar_state="expanded",
)


def _inject_global_styles():
    st.markdown("""
    <style>
        .block-container { padding-top: 1rem; padding-left: 5rem; padding-right: 5rem; }
        h1 { font-size: 1.75rem !important; }
        :root { --primary-color: #6497D6; }
        h1, h2, h3 { color: var(--primary-color) !important; }
        .stDownloadButton button {
            background-color: var(--primary-color);
            color: white !important;
            border: none;
            border-radius: 6px;
        }
    </style>
    """, unsafe_allow_html=True)


def _init_session() -> None:
    if "max_gens" in st.session_state:
        return
    try:
        cfg = load_run_config(use_dotenv=False)
    except AlgebraError as e:
        st.error(f"Configuration error: {e}")
        st.stop()
    configure_logging(cfg.log_level)
    st.session_state["max_gens"] = cfg.max_gens


# ══════════════════════════════════════════════════════════════════════════════
# MAIN
# ══════════════════════════════════════════════════════════════════════════════
def main():
    _inject_global_styles()
    _init_session()

    selected_section = render_sidebar_navigation(app_version=APP_VERSION, app_env=APP_ENV)
    section = NAV_SECTIONS.get(selected_section)
    if section is None:
        st.warning("Unknown menu selection.")
        return
    importlib.import_module(section["module"]).render()


if __name__ == "__main__":
    main()
