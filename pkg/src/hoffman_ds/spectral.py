"""Adjacency spectra of graphs."""
from __future__ import annotations

from typing import List

from .graph import Graph
from .linalg import Spectrum, char_poly


def adjacency_char_poly(g: Graph) -> List[int]:
    if g.n == 0:
        return [1]
    return char_poly(g.adjacency_matrix())


def graph_spectrum(g: Graph) -> Spectrum:
    return Spectrum.from_charpoly(adjacency_char_poly(g))


def is_cospectral(g: Graph, h: Graph) -> bool:
    """Equal characteristic polynomials, compared exactly."""
    return g.n == h.n and adjacency_char_poly(g) == adjacency_char_poly(h)
