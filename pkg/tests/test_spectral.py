import numpy as np
import pytest
from hypothesis import given

from hoffman_ds.families import (
    build_clique_extension,
    build_grid,
    complement,
    cycle,
    disjoint_union,
    empty,
    shrikhande,
)
from hoffman_ds.spectral import adjacency_char_poly, graph_spectrum, is_cospectral

from conftest import graphs, regular_graphs


def test_empty_graph_spectrum():
    assert graph_spectrum(empty(3)).format() == "0^3"


def test_grid_and_shrikhande_cospectral():
    assert is_cospectral(build_grid(4, 4), shrikhande())
    assert graph_spectrum(shrikhande()).integer_roots == [(6, 1), (2, 6), (-2, 9)]


def test_not_cospectral():
    assert not is_cospectral(cycle(6), cycle(5))
    assert not is_cospectral(cycle(6), disjoint_union([cycle(3), cycle(3)]))


@given(graphs(max_n=9))
def test_eigenvalues_match_numpy(g):
    s = graph_spectrum(g)
    assert s.dim == g.n
    ref = sorted(np.linalg.eigvalsh(g.adjacency_matrix().astype(float)), reverse=True)
    assert [float(v) for v in s.eigenvalues()] == pytest.approx(ref, abs=1e-7)


@given(regular_graphs(max_n=12))
def test_clique_extension_spectrum_law(g):
    # each eigenvalue lambda of g becomes 2 lambda + 1, plus -1 with multiplicity n
    spec = graph_spectrum(g)
    ext = graph_spectrum(build_clique_extension(g, 2))
    base = np.array([float(v) for v in spec.eigenvalues()])
    want = sorted(list(2 * base + 1) + [-1.0] * g.n, reverse=True)
    assert [float(v) for v in ext.eigenvalues()] == pytest.approx(want, abs=1e-7)
    assert len(adjacency_char_poly(build_clique_extension(g, 2))) == 2 * g.n + 1


@given(regular_graphs(max_n=12))
def test_complement_spectrum_of_regular_graph(g):
    # for k-regular g, the non-principal eigenvalues map to -1 - lambda
    k = g.regular_degree()
    vals = [float(v) for v in graph_spectrum(g).eigenvalues()]
    vals.remove(float(k))
    want = sorted([g.n - 1 - k] + [-1 - v for v in vals], reverse=True)
    got = [float(v) for v in graph_spectrum(complement(g)).eigenvalues()]
    assert got == pytest.approx(want, abs=1e-7)
