# nav/navigation_bar.py
"""
Sidebar navigation for Betti Lab.
One option_menu for the sections; pages with several views use st.tabs().
"""

import streamlit as st
from streamlit_option_menu import option_menu

# ── Brand colors ──────────────────────────────────────────────────────────────
PRIMARY   = "#6497D6"
SECONDARY = "#B3D7ED"
BG        = "#FFFFFF"
TEXT      = "#1E293B"

# ── Navigation structure ──────────────────────────────────────────────────────
NAV_SECTIONS = {
    "Home":          {"icon": "house-fill",        "module": "app_pages.home"},
    "Betti Explorer": {"icon": "grid-3x3-gap-fill", "module": "app_pages.betti_explorer"},
    "Decompositions": {"icon": "diagram-3-fill",    "module": "app_pages.decomposition_view"},
    "Conjecture Lab": {"icon": "search",            "module": "app_pages.conjecture_lab"},
    "Data Exports":  {"icon": "file-earmark-arrow-down", "module": "app_pages.data_exports"},
}

_SIDEBAR_CSS = """
<style>
section[data-testid="stSidebar"] {
    background-color: #F1F5F9 !important;
    border-right: 1px solid #E2E8F0;
}
.bl-brand { text-align: center; padding: 1.25rem 0 0.75rem; }
.bl-brand h2 {
    color: #6497D6; font-size: 1.05rem; font-weight: 700;
    margin: 6px 0 2px; letter-spacing: 0.5px;
}
.bl-brand p { color: #64748B; font-size: 0.7rem; margin: 0; letter-spacing: 2px; }
.bl-footer { font-size: 0.65rem; color: #94A3B8; text-align: center; padding: 0.5rem; }

.stTabs [data-baseweb="tab-list"] { gap: 6px; border-bottom: 2px solid #B3D7ED; }
.stTabs [aria-selected="true"] {
    background-color: #6497D6 !important;
    color: white !important;
    font-weight: 600 !important;
}
#MainMenu { visibility: hidden; }
footer { visibility: hidden; }
</style>
"""


def _menu_styles() -> dict:
    return {
        "container": {"padding": "0 !important", "background-color": BG, "margin": "0"},
        "icon": {"color": PRIMARY, "font-size": "13px"},
        "nav-link": {
            "font-size": "13px",
            "font-weight": "600",
            "color": TEXT,
            "border-radius": "8px",
            "padding": "0.45rem 0.75rem",
            "margin": "2px 0",
            "--hover-color": SECONDARY,
        },
        "nav-link-selected": {"background-color": PRIMARY, "color": "white", "font-weight": "700"},
    }


def _section_default_index(sections: list[str]) -> int:
    current = st.session_state.get("nav_section", "Home")
    return sections.index(current) if current in sections else 0


def render_sidebar_navigation(*, app_version: str = "", app_env: str = "local") -> str:
    """
    Renders the sidebar: brand, section nav, version.
    Returns the selected section name.
    """
    st.markdown(_SIDEBAR_CSS, unsafe_allow_html=True)
    sections = list(NAV_SECTIONS)

    with st.sidebar:
        st.markdown(
            '<div class="bl-brand"><h2>Betti Lab</h2><p>MONOMIAL RESOLUTIONS</p></div>',
            unsafe_allow_html=True,
        )
        selected_section = option_menu(
            menu_title=None,
            options=sections,
            icons=[NAV_SECTIONS[s]["icon"] for s in sections],
            default_index=_section_default_index(sections),
            orientation="vertical",
            styles=_menu_styles(),
            key="main_nav_menu",
        )
        st.session_state["nav_section"] = selected_section

        st.markdown("<hr style='border-color:#D5CEC4;margin:0.75rem 0'>", unsafe_allow_html=True)
        footer = f"v{app_version}" if app_version else ""
        if app_env != "production":
            footer += f" · {app_env.upper()}"
        st.markdown(f'<div class="bl-footer">{footer}</div>', unsafe_allow_html=True)

    return selected_section
