"""Exact matrix realizations of real Lie algebras and the worked cases."""

from .algebra import *  # noqa: F401,F403
from .cases import (  # noqa: F401
    ACCEPTANCE_CASES,
    Case,
    build_case,
    central_action_spectrum,
    so1n_case,
    sopq_case,
    sl_case,
    sp1n_case,
    su1n_case,
)
from .compact import CompactOrbitCheck, compact_algebra, compact_orbit_check, compact_orbit_gram, coweight, torus_element  # noqa: F401
