"""Exact Laplacian spectral invariants of small graphs.

The sigma invariant (number of Laplacian eigenvalues at least the average
degree), Laplacian energy, classical eigenvalue bounds, structural family
recognisers and an exhaustive verification harness.
"""

from __future__ import annotations

from .exact import SigmaResult, char_poly, laplacian, m_interval, multiplicity_at, sigma
from .graph import (Graph, complement, degree_stats, disjoint_union, family, from_edges,
                    is_connected, join)
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .numeric import Spectrum, laplacian_energy, laplacian_spectrum
from .poly import IntPolynomial, count_roots_cmp

__all__ = [
    "Graph", "Graph6Error", "IntPolynomial", "SigmaResult", "Spectrum", "char_poly",
    "complement", "count_roots_cmp", "degree_stats", "disjoint_union", "family",
    "from_edges", "is_connected", "join", "laplacian", "laplacian_energy",
    "laplacian_spectrum", "m_interval", "multiplicity_at", "parse_graph6", "sigma",
    "to_graph6",
]
