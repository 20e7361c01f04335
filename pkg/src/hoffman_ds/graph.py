"""Simple undirected graphs on bitset adjacency rows, and local queries."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph; ``rows[v]`` has bit ``u`` set iff u ~ v."""

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n: int, rows: Sequence[int], labels: Optional[Sequence[str]] = None):
        if len(rows) != n:
            raise ValueError("need one adjacency row per vertex")
        for v, r in enumerate(rows):
            if r >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if r >> n:
                raise ValueError(f"row {v} refers to a vertex >= n")
            for u in iter_bits(r):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        if labels is None:
            labels = [str(v) for v in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("need one label per vertex")
        if len(set(labels)) != n:
            raise ValueError("vertex labels must be unique")
        self.n = n
        self.rows: Tuple[int, ...] = tuple(rows)
        self.labels: Tuple[str, ...] = labels

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def from_matrix(cls, a, labels=None) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]]
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix is not symmetric")
        return cls.from_edges(n, edges, labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.rows, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [r.bit_count() for r in self.rows]

    def regular_degree(self) -> Optional[int]:
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None if degs else 0

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << index[u] for u in iter_bits(self.rows[v]) if u in index))
        return Graph(len(vertices), rows, [self.labels[v] for v in vertices])

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.rows, labels)

    def vertex(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class VertexPairStats:
    adjacent: bool
    common_neighbors: int
    walk3: int


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range for n={g.n}")


def common_neighbors(g: Graph, x: int, y: int) -> int:
    return (g.rows[x] & g.rows[y]).bit_count()


def walk3(g: Graph, x: int, y: int) -> int:
    """(A^3)_{xy} by counting walks x-u-w-y."""
    ry = g.rows[y]
    return sum((g.rows[u] & ry).bit_count() for u in iter_bits(g.rows[x]))


def pair_stats(g: Graph, x: int, y: int) -> VertexPairStats:
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise ValueError("pair_stats needs distinct vertices; use diagonal_walk3")
    return VertexPairStats(g.has_edge(x, y), common_neighbors(g, x, y), walk3(g, x, y))


def diagonal_walk3(g: Graph, x: int) -> int:
    """(A^3)_{xx}, twice the number of triangles through x."""
    _check_vertex(g, x)
    return walk3(g, x, x)


def twin_classes(g: Graph) -> List[List[int]]:
    """Classes of the relation x R y iff closed neighbourhoods coincide."""
    groups: Dict[int, List[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v] | 1 << v, []).append(v)
    return sorted(groups.values())


class TwinQuotientError(ValueError):
    pass


def quotient_by_twins(g: Graph, q: int) -> Graph:
    """Contract every twin class of size q to a single vertex."""
    classes = twin_classes(g)
    for cls in classes:
        if len(cls) != q:
            raise TwinQuotientError(
                f"twin class {[g.labels[v] for v in cls]} has size {len(cls)}, expected {q}"
            )
    rows = [0] * len(classes)
    for i, cls in enumerate(classes):
        for j, other in enumerate(classes):
            if i == j:
                continue
            links = sum((g.rows[v] & _mask(other)).bit_count() for v in cls)
            if links == len(cls) * len(other):
                rows[i] |= 1 << j
            elif links:
                raise TwinQuotientError(
                    f"classes {g.labels[cls[0]]} and {g.labels[other[0]]} are partially joined"
                )
    return Graph(len(classes), rows, [_class_label(g, cls) for cls in classes])


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _class_label(g: Graph, cls: Sequence[int]) -> str:
    bases = {g.labels[v].rsplit("#", 1)[0] for v in cls}
    if len(bases) == 1 and all("#" in g.labels[v] for v in cls):
        return bases.pop()
    return "|".join(g.labels[v] for v in cls)


def _greedy_color_bound(g: Graph, cand: int) -> int:
    """Number of colours in a greedy colouring of the candidate set."""
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~low & ~g.rows[v]
    return colors


def clique_number(g: Graph) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _greedy_color_bound(g, cand) <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            expand(size + 1, cand & g.rows[v])

    expand(0, (1 << g.n) - 1)
    return best


def cliques_of_size(g: Graph, k: int, limit: Optional[int] = None) -> List[List[int]]:
    """All k-cliques as ascending vertex lists, in lexicographic order."""
    out: List[List[int]] = []

    def expand(chosen: List[int], cand: int) -> bool:
        if len(chosen) == k:
            out.append(list(chosen))
            return limit is not None and len(out) >= limit
        need = k - len(chosen)
        if cand.bit_count() < need or _greedy_color_bound(g, cand) < need:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            chosen.append(v)
            stop = expand(chosen, cand & g.rows[v])
            chosen.pop()
            if stop:
                return True
            if cand.bit_count() < need:
                break
        return False

    if k == 0:
        return [[]]
    expand([], (1 << g.n) - 1)
    return out


def max_clique(g: Graph) -> List[int]:
    """Lexicographically smallest maximum clique."""
    if g.n == 0:
        return []
    omega = clique_number(g)
    return cliques_of_size(g, omega, limit=1)[0]


def all_max_cliques(g: Graph) -> List[List[int]]:
    if g.n == 0:
        return [[]]
    return cliques_of_size(g, clique_number(g))


def is_strongly_regular(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """(v, k, lambda, mu) when g is strongly regular, else None."""
    k = g.regular_degree()
    if k is None:
        return None
    lam = set()
    mu = set()
    for x in range(g.n):
        for y in range(x + 1, g.n):
            (lam if g.has_edge(x, y) else mu).add(common_neighbors(g, x, y))
    if len(lam) > 1 or len(mu) > 1:
        return None
    return g.n, k, lam.pop() if lam else 0, mu.pop() if mu else 0
