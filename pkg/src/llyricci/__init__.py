"""Exact Lin-Lu-Yau Ricci curvature on graphs and instance checks of order bounds."""

__version__ = "0.1.0"

from .curvature import (  # noqa: E402
    CurvatureReport,
    curvature_all_edges,
    idleness_profile,
    kappa_alpha,
    kappa_lly,
    kappa_lly_bruteforce,
    min_edge_curvature,
)
from .graph import Graph, has_c3, has_c5  # noqa: E402

__all__ = [
    "CurvatureReport",
    "Graph",
    "curvature_all_edges",
    "has_c3",
    "has_c5",
    "idleness_profile",
    "kappa_alpha",
    "kappa_lly",
    "kappa_lly_bruteforce",
    "min_edge_curvature",
]
