import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hoffman_ds.families import build_grid, complete
from hoffman_ds.graph import Graph
from hoffman_ds.hoffman import (
    G3,
    G4,
    G5,
    OTHER,
    DirectSumError,
    HoffmanError,
    HoffmanGraph,
    classify_all,
    classify_factor,
    decompose,
    direct_sum,
    factor_shape,
    fat_pair_violations,
    forced_together,
    g3_shape,
    g4_shape,
    g5_shape,
    g5_type,
    generated_subgraph,
    is_t_fat,
    line_hoffman_from_cliques,
    make_hoffman,
    quasi_clique,
    quasi_clique_order,
    slim_graph,
    special_matrix,
)
from hoffman_ds.io import format_edge_list, parse_edge_list
from hoffman_ds.linalg import spectrum

from conftest import random_gluing, random_hoffman, summand_index


def single(f):
    return make_hoffman(Graph(1, [0], ["x"]), [[0]] * f)


@pytest.mark.parametrize("f", [1, 2, 3, 5])
def test_special_matrix_single_slim(f):
    h = single(f)
    assert special_matrix(h) == [[-f]]
    assert is_t_fat(h, f) and not is_t_fat(h, f + 1)


def test_make_hoffman_validation():
    with pytest.raises(HoffmanError):
        make_hoffman(Graph(1, [0]), [[]])
    with pytest.raises(HoffmanError):
        make_hoffman(Graph(1, [0]), [[3]])
    # fat vertices adjacent to each other
    with pytest.raises(HoffmanError):
        HoffmanGraph(complete(3), [1, 2])
    # fat vertex without slim neighbour
    with pytest.raises(HoffmanError):
        HoffmanGraph(Graph(2, [0, 0]), [1])


def test_g4_shape():
    h = g4_shape()
    assert special_matrix(h) == [[-2, -1], [-1, -2]]
    assert spectrum(special_matrix(h)).integer_roots == [(-1, 1), (-3, 1)]
    assert slim_graph(h).num_edges == 1
    assert factor_shape(h) == G4
    assert len(decompose(h).factors) == 1


def test_g3_shape():
    h = g3_shape()
    assert special_matrix(h) == [[-2, -1], [-1, -2]]
    assert is_t_fat(h, 2)
    assert factor_shape(h) == G3
    assert len(decompose(h).factors) == 1


def test_adjacent_path_with_one_shared_fat_splits():
    # slim x1 ~ x2 sharing exactly one fat vertex is a direct sum of two pieces
    h = make_hoffman(Graph.from_edges(2, [(0, 1)]), [[0], [0, 1], [1]])
    assert special_matrix(h) == [[-2, 0], [0, -2]]
    assert len(decompose(h).factors) == 2


def test_g5_shape():
    h = g5_shape()
    assert special_matrix(h) == [[-3]]
    assert is_t_fat(h, 3)
    assert factor_shape(h) == G5


def test_quasi_clique():
    h = make_hoffman(build_grid(2, 2), [[0, 1], [2, 3], [0, 2]])
    f = h.fat_vertices[0]
    assert quasi_clique_order(h, f) == 2
    assert quasi_clique(h, f).num_edges == 1
    with pytest.raises(HoffmanError):
        quasi_clique(h, 0)


def test_direct_sum_single_slims():
    a, b = single(2), single(2)
    s = direct_sum(a, b, {a.fat_vertices[0]: b.fat_vertices[0]})
    assert len(s.slim_vertices) == 2 and len(s.fat_vertices) == 3
    x, y = s.slim_vertices
    assert s.underlying.has_edge(x, y)
    assert special_matrix(s) == [[-2, 0], [0, -2]]
    assert [f.slim for f in decompose(s).factors] == [(x,), (y,)]


def test_direct_sum_without_gluing_is_disjoint():
    a, b = g4_shape(), g5_shape()
    s = direct_sum(a, b, {})
    assert len(s.slim_vertices) == 3 and s.underlying.num_edges == 1 + 4 + 3
    assert len(decompose(s).factors) == 2


def test_direct_sum_rejects_two_shared_fat():
    a, b = single(2), single(2)
    with pytest.raises(DirectSumError) as err:
        direct_sum(a, b, dict(zip(a.fat_vertices, b.fat_vertices)))
    assert err.value.witness == ("x", "x")


def test_direct_sum_rejects_slim_gluing():
    a = single(1)
    with pytest.raises(HoffmanError):
        direct_sum(a, a, {0: 1})


def test_decompose_non_adjacent_no_common_fat():
    h = make_hoffman(Graph(2, [0, 0]), [[0], [1]])
    assert len(decompose(h).factors) == 2


def test_forced_together_rule():
    h = g4_shape()
    assert forced_together(h, 0, 1)
    h = make_hoffman(Graph.from_edges(2, [(0, 1)]), [[0, 1]])
    assert not forced_together(h, 0, 1)
    h = make_hoffman(Graph(2, [0, 0]), [[0, 1]])
    assert forced_together(h, 0, 1)


def test_generated_subgraph():
    h = make_hoffman(Graph(3, [0, 0, 0]), [[0, 1], [2]])
    sub = generated_subgraph(h, [0])
    assert len(sub.slim_vertices) == 1 and len(sub.fat_vertices) == 1


@given(st.randoms(use_true_random=False))
def test_special_matrix_symmetric(rnd):
    h = random_hoffman(rnd, max_slim=6, max_fat=4)
    m = special_matrix(h)
    assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))
    for i, x in enumerate(h.slim_vertices):
        assert m[i][i] == -len(h.fat_neighbors(x))


@given(st.randoms(use_true_random=False))
def test_decompose_partition_and_cross_condition(rnd):
    h = random_hoffman(rnd, max_slim=6, max_fat=4)
    dec = decompose(h)
    parts = dec.slim_partition()
    assert sorted(x for p in parts for x in p) == h.slim_vertices
    assert dec.cross_violations() == []
    # factors are indecomposable: each one decomposes into itself
    for f in dec.factors:
        assert len(decompose(f.hoffman).factors) == 1


@settings(max_examples=150)
@given(st.randoms(use_true_random=False), st.integers(0, 2))
def test_decompose_direct_sum_round_trip(rnd, size):
    h1, h2 = random_hoffman(rnd), random_hoffman(rnd)
    gluing = random_gluing(rnd, h1, h2, size)
    try:
        s = direct_sum(h1, h2, gluing)
    except DirectSumError:
        assume(False)
    index = summand_index(h1, h2, gluing)
    want = sorted(
        [tuple(p) for p in decompose(h1).slim_partition()]
        + [tuple(sorted(index[x] for x in p)) for p in decompose(h2).slim_partition()]
    )
    assert sorted(decompose(s).slim_partition()) == want


def test_classify_examples():
    t = 3
    assert g5_type(t, (8, 7, 1)) == 3
    assert g5_type(t, (8, 6, 2)) == 4
    assert g5_type(t, (7, 7, 2)) == 5
    assert g5_type(t, (8, 8, 0)) is None
    ft = classify_factor(g5_shape(), t, [1, 8, 7])
    assert ft.tag == G5 and ft.vertex_types == ((0, 3),) and ft.quasi_clique_orders == (1, 7, 8)
    ft = classify_factor(g4_shape(), t, [8, 8])
    assert [v for _, v in ft.vertex_types] == [2, 2]
    ft = classify_factor(g4_shape(), t, [8, 7])
    assert [v for _, v in ft.vertex_types] == [None, None]
    ft = classify_factor(g3_shape(), t, [8, 8, 7])
    assert ft.tag == G3 and dict(ft.vertex_types) == {0: 1, 1: None}
    other = make_hoffman(Graph(3, [0, 0, 0]), [[0, 1, 2]])
    assert classify_factor(other, t, [3]).tag == OTHER
    with pytest.raises(HoffmanError):
        classify_factor(g4_shape(), t, [8])


def test_line_hoffman_of_extended_grid():
    from hoffman_ds.graph import all_max_cliques
    from hoffman_ds.verify.target import target_graph

    g = target_graph(2)
    h = line_hoffman_from_cliques(g, all_max_cliques(g))
    assert is_t_fat(h, 2) and not is_t_fat(h, 3)
    types = classify_all(h, 2)
    assert len(types) == 9 and all(ft.tag == G4 for ft in types)
    assert fat_pair_violations(h) == []
    assert decompose(h).cross_violations() == []


def test_fat_pair_violation_detected():
    # two fat vertices sharing three slim vertices
    h = make_hoffman(complete(3), [[0, 1, 2], [0, 1, 2]])
    bad = fat_pair_violations(h)
    assert bad and len(bad[0]["shared_slim"]) == 3


def test_line_hoffman_rejects_non_clique():
    with pytest.raises(HoffmanError):
        line_hoffman_from_cliques(Graph(2, [0, 0]), [[0, 1]])


def test_hoffman_text_round_trip():
    h = g3_shape()
    text = format_edge_list(h.underlying, h.fat_vertices)
    g, fat = parse_edge_list(text)
    assert HoffmanGraph(g, fat) == h
