import pytest
from hypothesis import given

from hoffman_ds.families import build_grid, cycle
from hoffman_ds.graph import Graph
from hoffman_ds.io import (
    FormatError,
    format_edge_list,
    parse_edge_list,
    partition_from_json,
    partition_to_json,
    read_graph,
    to_dot,
    write_graph,
)

from conftest import graphs


def test_c4_text():
    g = Graph(4, build_grid(2, 2).rows)
    assert format_edge_list(g) == "4 4\n0 1\n0 2\n1 3\n2 3\n"


@given(graphs(max_n=10))
def test_round_trip(g):
    back, fat = parse_edge_list(format_edge_list(g))
    assert back == g and fat is None


def test_round_trip_labels_and_fat():
    g = build_grid(2, 3)
    text = format_edge_list(g, fat=[5, 1])
    assert text.splitlines()[-1] == "fat: 1 5"
    back, fat = parse_edge_list(text)
    assert back == g and fat == [1, 5]


def test_file_round_trip(tmp_path):
    path = tmp_path / "c5.el"
    write_graph(cycle(5), path)
    assert read_graph(path) == cycle(5)


def test_empty_graph():
    g, _ = parse_edge_list("3 0\n")
    assert g.n == 3 and g.num_edges == 0


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "2 1\n",
        "2 1\n1 0\n",
        "2 1\n0 2\n",
        "3 2\n0 1\n0 1\n",
        "2 1\n0 x\n",
        "2 1\n0 1\n# labels\na\n",
        "2 1\n0 1\nfat: 7\n",
        "2 1\n0 1\nextra\n",
        "2 0\n# labels\na\na\n",
    ],
)
def test_malformed(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_dot():
    out = to_dot(cycle(3), fat=[2])
    assert out.startswith("graph G {")
    assert "0 -- 1;" in out and "shape=box" in out


def test_partition_json():
    assert partition_from_json(partition_to_json([(0, 2), [1]])) == [[0, 2], [1]]
    with pytest.raises(FormatError):
        partition_from_json('{"a": 1}')
