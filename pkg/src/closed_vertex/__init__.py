"""Exact local Gromov-Witten invariants of the closed topological vertex."""

from .cremona import anticanonical_degree, cremona_on_X, tau_star_Xhat
from .invariants import (
    InvalidDegrees,
    InvariantResult,
    VertexDegrees,
    bernoulli,
    closed_vertex_invariant,
    fp_invariant,
    invariant,
    invariant_table,
)
from .lattice import CurveClassX, CurveClassXhat, DivisorClassX, DivisorClassXhat

__version__ = "0.1.0"
