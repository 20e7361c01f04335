import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hoffman_ds.families import (
    build_clique_extension,
    build_coclique_extension,
    build_grid,
    cocktail_party,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    line_graph,
    path,
    shrikhande,
    two_clique_extended_grid,
)
from hoffman_ds.graph import (
    Graph,
    TwinQuotientError,
    all_max_cliques,
    clique_number,
    cliques_of_size,
    diagonal_walk3,
    is_strongly_regular,
    max_clique,
    pair_stats,
    quotient_by_twins,
    twin_classes,
    walk3,
)
from hoffman_ds.isomorphism import is_isomorphic
from hoffman_ds.spectral import graph_spectrum

from conftest import graphs, regular_graphs, to_nx


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [0, 0], ["a", "a"])


def test_grid_small():
    g = build_grid(2, 2)
    assert g.edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert is_isomorphic(g, cycle(4))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 3), (4, 5)])
def test_grid_is_rook_graph(m, n):
    g = build_grid(m, n)
    ref = nx.cartesian_product(nx.complete_graph(m), nx.complete_graph(n))
    assert nx.is_isomorphic(to_nx(g), ref)
    assert g.regular_degree() == m + n - 2


def test_grid_rejects_bad_sizes():
    with pytest.raises(ValueError):
        build_grid(0, 3)


def test_clique_extension_examples():
    assert is_isomorphic(build_clique_extension(cycle(5), 1), cycle(5))
    e = build_clique_extension(build_grid(3, 3), 2)
    assert e.n == 18 and e.regular_degree() == 9
    assert graph_spectrum(e).integer_roots == [(9, 1), (3, 4), (-1, 9), (-3, 4)]
    c4 = build_clique_extension(cycle(4), 2)
    assert is_isomorphic(c4, complement(disjoint_union([cycle(4), cycle(4)])))


def test_clique_extension_matches_kronecker():
    import numpy as np

    g = build_grid(2, 3)
    a = g.adjacency_matrix()
    want = np.kron(np.ones((3, 3), dtype=int), a + np.eye(g.n, dtype=int)) - np.eye(3 * g.n, dtype=int)
    got = build_clique_extension(g, 3)
    assert is_isomorphic(got, Graph.from_matrix(want))


def test_coclique_extension_examples():
    assert is_isomorphic(build_coclique_extension(path(4), 1), path(4))
    assert is_isomorphic(build_coclique_extension(complete(2), 2), cycle(4))
    g = build_coclique_extension(build_grid(2, 2), 2)
    assert g.n == 8 and g.regular_degree() == 4


def test_small_families():
    assert empty(3).num_edges == 0
    assert cocktail_party(3).num_edges == 12
    assert complete_bipartite(2, 3).num_edges == 6
    assert complete(5).regular_degree() == 4
    assert line_graph(complete(4)).regular_degree() == 4
    assert nx.is_isomorphic(to_nx(line_graph(cycle(5))), nx.cycle_graph(5))


def test_shrikhande_parameters():
    s = shrikhande()
    assert is_strongly_regular(s) == (16, 6, 2, 2)
    assert is_strongly_regular(build_grid(4, 4)) == (16, 6, 2, 2)
    assert clique_number(s) == 3
    assert clique_number(build_grid(4, 4)) == 4


def test_two_clique_extended_grid():
    assert is_isomorphic(two_clique_extended_grid(2), build_clique_extension(build_grid(3, 3), 2))


def test_pair_stats_in_extension():
    # t = 2: twins share all 4t other neighbours, other adjacent pairs 2t, non-adjacent 4
    g = two_clique_extended_grid(2)
    nxg = to_nx(g)
    twins = {frozenset(c) for c in twin_classes(g)}
    seen = {"twin": set(), "adjacent": set(), "apart": set()}
    for x in range(g.n):
        for y in range(x + 1, g.n):
            s = pair_stats(g, x, y)
            assert s.common_neighbors == len(list(nx.common_neighbors(nxg, x, y)))
            kind = "twin" if frozenset((x, y)) in twins else "adjacent" if s.adjacent else "apart"
            seen[kind].add(s.common_neighbors)
    assert seen == {"twin": {8}, "adjacent": {4}, "apart": {4}}


def test_pair_stats_c4():
    s = pair_stats(cycle(4), 0, 2)
    assert not s.adjacent and s.common_neighbors == 2 and s.walk3 == 0
    assert diagonal_walk3(cycle(4), 0) == 0
    assert diagonal_walk3(two_clique_extended_grid(2), 0) == 40
    with pytest.raises(ValueError):
        pair_stats(cycle(4), 1, 1)


@given(graphs(max_n=9))
def test_walk_counts_match_matrix_power(g):
    a = g.adjacency_matrix()
    a3 = a @ a @ a
    for x in range(g.n):
        assert diagonal_walk3(g, x) == a3[x, x]
        for y in range(g.n):
            assert walk3(g, x, y) == a3[x, y]


@given(graphs(max_n=11))
def test_clique_number_matches_networkx(g):
    nxg = to_nx(g)
    omega = max((len(c) for c in nx.find_cliques(nxg)), default=0)
    assert clique_number(g) == omega
    c = max_clique(g)
    assert len(c) == omega
    assert all(g.has_edge(u, v) for i, u in enumerate(c) for v in c[i + 1 :])
    want = sorted(sorted(c) for c in nx.find_cliques(nxg) if len(c) == omega)
    assert sorted(map(sorted, all_max_cliques(g))) == want


def test_max_clique_is_lexicographically_smallest():
    g = disjoint_union([complete(3), complete(3)])
    assert max_clique(g) == [0, 1, 2]
    e = two_clique_extended_grid(2)
    assert len(max_clique(e)) == 6


def test_cliques_of_size_limit():
    assert len(cliques_of_size(complete(5), 3)) == 10
    assert len(cliques_of_size(complete(5), 3, limit=2)) == 2


@given(graphs(max_n=9))
def test_twin_classes_partition_closed_neighbourhoods(g):
    classes = twin_classes(g)
    assert sorted(v for c in classes for v in c) == list(range(g.n))
    closed = [g.rows[v] | 1 << v for v in range(g.n)]
    for c in classes:
        assert len({closed[v] for v in c}) == 1
    reps = [closed[c[0]] for c in classes]
    assert len(set(reps)) == len(reps)


@given(graphs(min_n=2, max_n=8), st.integers(1, 3))
def test_twin_quotient_round_trip(g, q):
    if any(len(c) > 1 for c in twin_classes(g)):
        return
    ext = build_clique_extension(g, q)
    back = quotient_by_twins(ext, q)
    assert is_isomorphic(back, g)
    assert is_isomorphic(build_clique_extension(back, q), ext)


@given(regular_graphs(max_n=10), st.integers(1, 3))
def test_clique_extension_regularity(g, q):
    d = g.regular_degree()
    assert build_clique_extension(g, q).regular_degree() == q * (d + 1) - 1


def test_twin_quotient_rejects_wrong_sizes():
    with pytest.raises(TwinQuotientError):
        quotient_by_twins(cycle(5), 2)
    with pytest.raises(TwinQuotientError):
        quotient_by_twins(build_clique_extension(cycle(5), 3), 2)


def test_is_strongly_regular_rejects():
    assert is_strongly_regular(path(4)) is None
    assert is_strongly_regular(complete_bipartite(2, 3)) is None
    # complete graphs have no non-adjacent pair; mu is reported as 0
    assert is_strongly_regular(complete(4)) == (4, 3, 2, 0)
    assert is_strongly_regular(cycle(5)) == (5, 2, 0, 1)


@given(graphs(max_n=8))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).num_edges + g.num_edges == g.n * (g.n - 1) // 2
