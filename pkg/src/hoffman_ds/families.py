"""Constructors for the graph families used throughout the package."""
from __future__ import annotations

from itertools import combinations
from typing import List, Sequence

from .graph import Graph, iter_bits


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


def build_grid(m: int, n: int) -> Graph:
    """The m x n rook's graph: cells (i, j), adjacent iff same row or same column."""
    _positive("m", m)
    _positive("n", n)
    edges = []
    for u in range(m * n):
        i, j = divmod(u, n)
        for v in range(u + 1, m * n):
            k, l = divmod(v, n)
            if i == k or j == l:
                edges.append((u, v))
    labels = [f"({i},{j})" for i in range(m) for j in range(n)]
    return Graph.from_edges(m * n, edges, labels)


def build_clique_extension(g: Graph, q: int) -> Graph:
    """Blow every vertex up into a q-clique; copies of adjacent vertices are fully joined.

    Vertex ``x * q + a`` is copy ``a`` of ``x``; adjacency is J_q (x) (A + I) - I.
    """
    _positive("q", q)
    rows = []
    for x in range(g.n):
        closed = g.rows[x] | 1 << x
        block = 0
        for y in iter_bits(closed):
            block |= ((1 << q) - 1) << (y * q)
        for a in range(q):
            rows.append(block & ~(1 << (x * q + a)))
    labels = [f"{g.labels[x]}#{a}" for x in range(g.n) for a in range(q)]
    return Graph(g.n * q, rows, labels)


def build_coclique_extension(g: Graph, q: int) -> Graph:
    """Blow every vertex up into q pairwise non-adjacent copies; adjacency A (x) J_q."""
    _positive("q", q)
    rows = []
    for x in range(g.n):
        block = 0
        for y in iter_bits(g.rows[x]):
            block |= ((1 << q) - 1) << (y * q)
        rows.extend([block] * q)
    labels = [f"{g.labels[x]}#{a}" for x in range(g.n) for a in range(q)]
    return Graph(g.n * q, rows, labels)


def empty(n: int) -> Graph:
    _positive("n", n, 0)
    return Graph(n, [0] * n)


def cycle(n: int) -> Graph:
    _positive("n", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _positive("n", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _positive("n", n)
    return Graph.from_edges(n, combinations(range(n), 2))


def cocktail_party(n: int) -> Graph:
    """K_{2,...,2} with n parts: 2n vertices, i ~ j unless they share a part."""
    _positive("n", n)
    edges = [(i, j) for i, j in combinations(range(2 * n), 2) if i // 2 != j // 2]
    labels = [f"{p}{'ab'[s]}" for p in range(n) for s in range(2)]
    return Graph.from_edges(2 * n, edges, labels)


def complete_bipartite(a: int, b: int) -> Graph:
    _positive("a", a)
    _positive("b", b)
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: List[int] = []
    labels: List[str] = []
    offset = 0
    for k, g in enumerate(graphs):
        rows.extend(r << offset for r in g.rows)
        labels.extend(f"{k}:{lab}" for lab in g.labels)
        offset += g.n
    return Graph(offset, rows, labels)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)], g.labels)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g, adjacent iff they share an endpoint."""
    edges = g.edges()
    incident: List[List[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    pairs = set()
    for inc in incident:
        pairs.update(combinations(inc, 2))
    labels = [f"{g.labels[u]}-{g.labels[v]}" for u, v in edges]
    return Graph.from_edges(len(edges), sorted(pairs), labels)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.

    Strongly regular (16, 6, 2, 2), like the 4 x 4 grid, but not isomorphic to it.
    """
    steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for i in range(4):
        for j in range(4):
            for di, dj in steps:
                u, v = 4 * i + j, 4 * ((i + di) % 4) + (j + dj) % 4
                edges.add((min(u, v), max(u, v)))
    labels = [f"({i},{j})" for i in range(4) for j in range(4)]
    return Graph.from_edges(16, sorted(edges), labels)


def two_clique_extended_grid(t: int) -> Graph:
    """The 2-clique extension of the (t+1) x (t+1) grid."""
    _positive("t", t)
    return build_clique_extension(build_grid(t + 1, t + 1), 2)
