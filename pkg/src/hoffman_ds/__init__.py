"""Exact spectral and Hoffman-graph tools, with a checker for the spectral
characterisation of the 2-clique extension of the square grid."""
from .families import (
    build_clique_extension,
    build_coclique_extension,
    build_grid,
    complement,
    cycle,
    disjoint_union,
    shrikhande,
)
from .graph import Graph, clique_number, max_clique, quotient_by_twins, twin_classes
from .hoffman import HoffmanGraph, decompose, direct_sum, make_hoffman, special_matrix
from .interlacing import Partition, check_interlacing, is_equitable, quotient_matrix
from .isomorphism import find_isomorphism, is_isomorphic
from .linalg import Spectrum, char_poly, det, spectrum
from .spectral import graph_spectrum, is_cospectral

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "HoffmanGraph",
    "Partition",
    "Spectrum",
    "build_clique_extension",
    "build_coclique_extension",
    "build_grid",
    "char_poly",
    "check_interlacing",
    "clique_number",
    "complement",
    "cycle",
    "decompose",
    "det",
    "direct_sum",
    "disjoint_union",
    "find_isomorphism",
    "graph_spectrum",
    "is_cospectral",
    "is_equitable",
    "is_isomorphic",
    "make_hoffman",
    "max_clique",
    "quotient_by_twins",
    "quotient_matrix",
    "shrikhande",
    "special_matrix",
    "spectrum",
    "twin_classes",
]
