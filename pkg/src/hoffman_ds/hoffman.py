"""Hoffman graphs: slim/fat structure, special matrices, direct sums, factors."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .graph import Graph, iter_bits


class HoffmanError(ValueError):
    pass


class DirectSumError(HoffmanError):
    """Two slim vertices from different summands would share two fat vertices."""

    def __init__(self, message: str, witness: Tuple[str, str]):
        super().__init__(message)
        self.witness = witness


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class HoffmanGraph:
    """A graph whose vertices are split into slim and fat ones.

    Fat vertices are pairwise non-adjacent and each has a slim neighbour.
    """

    __slots__ = ("underlying", "fat_mask", "slim_mask")

    def __init__(self, underlying: Graph, fat: Iterable[int]):
        fat_mask = _mask(fat)
        if fat_mask >> underlying.n:
            raise HoffmanError("fat vertex index out of range")
        slim_mask = ((1 << underlying.n) - 1) & ~fat_mask
        for f in iter_bits(fat_mask):
            row = underlying.rows[f]
            if row & fat_mask:
                other = (row & fat_mask).bit_length() - 1
                raise HoffmanError(
                    f"fat vertices {underlying.labels[f]} and {underlying.labels[other]} are adjacent"
                )
            if not row & slim_mask:
                raise HoffmanError(f"fat vertex {underlying.labels[f]} has no slim neighbour")
        self.underlying = underlying
        self.fat_mask = fat_mask
        self.slim_mask = slim_mask

    def __repr__(self) -> str:
        return f"HoffmanGraph(slim={len(self.slim_vertices)}, fat={len(self.fat_vertices)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HoffmanGraph)
            and self.underlying == other.underlying
            and self.fat_mask == other.fat_mask
        )

    def __hash__(self) -> int:
        return hash((self.underlying, self.fat_mask))

    @property
    def slim_vertices(self) -> List[int]:
        return list(iter_bits(self.slim_mask))

    @property
    def fat_vertices(self) -> List[int]:
        return list(iter_bits(self.fat_mask))

    def is_fat(self, v: int) -> bool:
        return bool(self.fat_mask >> v & 1)

    def label(self, v: int) -> str:
        return self.underlying.labels[v]

    def fat_neighbors(self, x: int) -> List[int]:
        return list(iter_bits(self.underlying.rows[x] & self.fat_mask))

    def slim_neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.underlying.rows[v] & self.slim_mask))

    def common_fat(self, x: int, y: int) -> int:
        rows = self.underlying.rows
        return (rows[x] & rows[y] & self.fat_mask).bit_count()

    def common_slim(self, f1: int, f2: int) -> List[int]:
        rows = self.underlying.rows
        return list(iter_bits(rows[f1] & rows[f2] & self.slim_mask))


def make_hoffman(
    slim: Graph,
    fat_memberships: Sequence[Iterable[int]],
    fat_labels: Optional[Sequence[str]] = None,
) -> HoffmanGraph:
    """Add one fat vertex per membership set, adjacent to exactly that set of slim vertices."""
    s = slim.n
    sets = [sorted(set(m)) for m in fat_memberships]
    rows = list(slim.rows) + [0] * len(sets)
    for i, members in enumerate(sets):
        if not members:
            raise HoffmanError(f"fat membership set {i} is empty")
        f = s + i
        for x in members:
            if not 0 <= x < s:
                raise HoffmanError(f"slim vertex {x} out of range")
            rows[f] |= 1 << x
            rows[x] |= 1 << f
    if fat_labels is None:
        fat_labels = [f"F{i + 1}" for i in range(len(sets))]
    g = Graph(s + len(sets), rows, list(slim.labels) + list(fat_labels))
    return HoffmanGraph(g, range(s, s + len(sets)))


def special_matrix(h: HoffmanGraph) -> List[List[int]]:
    """A_s - C C^T over the slim vertices in index order."""
    slim = h.slim_vertices
    return [
        [
            (1 if h.underlying.has_edge(x, y) else 0) - h.common_fat(x, y)
            for y in slim
        ]
        for x in slim
    ]


def slim_graph(h: HoffmanGraph) -> Graph:
    return h.underlying.induced(h.slim_vertices)


def _require_fat(h: HoffmanGraph, f: int) -> None:
    if not 0 <= f < h.underlying.n or not h.is_fat(f):
        raise HoffmanError(f"vertex {f} is not fat")


def quasi_clique(h: HoffmanGraph, f: int) -> Graph:
    """Slim subgraph induced by the slim neighbours of fat vertex ``f``."""
    _require_fat(h, f)
    return h.underlying.induced(h.slim_neighbors(f))


def quasi_clique_order(h: HoffmanGraph, f: int) -> int:
    _require_fat(h, f)
    return (h.underlying.rows[f] & h.slim_mask).bit_count()


def is_t_fat(h: HoffmanGraph, t: int) -> bool:
    return all(len(h.fat_neighbors(x)) >= t for x in h.slim_vertices)


def _unique_labels(taken: set, labels: Sequence[str]) -> List[str]:
    out = []
    for lab in labels:
        while lab in taken:
            lab += "'"
        taken.add(lab)
        out.append(lab)
    return out


def direct_sum(h1: HoffmanGraph, h2: HoffmanGraph, gluing: Mapping[int, int]) -> HoffmanGraph:
    """Glue fat vertices of ``h1`` (keys) onto fat vertices of ``h2`` (values).

    Slim vertices from different sides become adjacent exactly when they
    share a fat neighbour; sharing two is an error.
    """
    for f1, f2 in gluing.items():
        _require_fat(h1, f1)
        _require_fat(h2, f2)
    if len(set(gluing.values())) != len(gluing):
        raise HoffmanError("gluing must identify fat vertices pairwise")
    g1, g2 = h1.underlying, h2.underlying
    glued_into = {f2: f1 for f1, f2 in gluing.items()}
    index: Dict[int, int] = {}
    pos = g1.n
    for v in range(g2.n):
        if v in glued_into:
            index[v] = glued_into[v]
        else:
            index[v] = pos
            pos += 1
    rows = list(g1.rows) + [0] * (pos - g1.n)
    for v in range(g2.n):
        for u in iter_bits(g2.rows[v]):
            rows[index[v]] |= 1 << index[u]
    fat_new = h1.fat_mask | _mask(index[f] for f in h2.fat_vertices)
    for x in h1.slim_vertices:
        for y2 in h2.slim_vertices:
            y = index[y2]
            shared = (rows[x] & rows[y] & fat_new).bit_count()
            if shared >= 2:
                raise DirectSumError(
                    f"slim vertices {g1.labels[x]} and {g2.labels[y2]} share {shared} fat vertices",
                    (g1.labels[x], g2.labels[y2]),
                )
            if shared == 1:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    taken = set(g1.labels)
    extra = _unique_labels(taken, [g2.labels[v] for v in range(g2.n) if v not in glued_into])
    return HoffmanGraph(Graph(pos, rows, list(g1.labels) + extra), iter_bits(fat_new))


def _generated(h: HoffmanGraph, slim: Iterable[int]) -> Tuple[HoffmanGraph, List[int]]:
    chosen = _mask(slim)
    fat = 0
    for x in iter_bits(chosen):
        fat |= h.underlying.rows[x] & h.fat_mask
    verts = list(iter_bits(chosen | fat))
    sub = h.underlying.induced(verts)
    return HoffmanGraph(sub, [i for i, v in enumerate(verts) if fat >> v & 1]), verts


def generated_subgraph(h: HoffmanGraph, slim: Iterable[int]) -> HoffmanGraph:
    """Induced Hoffman subgraph on ``slim`` together with all of its fat neighbours."""
    return _generated(h, slim)[0]


def forced_together(h: HoffmanGraph, x: int, y: int) -> bool:
    """True if slim x, y cannot lie in different direct summands."""
    shared = h.common_fat(x, y)
    if h.underlying.has_edge(x, y):
        return shared != 1
    return shared >= 1


@dataclass
class Factor:
    slim: Tuple[int, ...]
    hoffman: HoffmanGraph
    # vertices[i] is the index in the source graph of vertex i of ``hoffman``
    vertices: Tuple[int, ...]


@dataclass
class FactorDecomposition:
    source: HoffmanGraph
    factors: List[Factor] = field(default_factory=list)

    def slim_partition(self) -> List[Tuple[int, ...]]:
        return [f.slim for f in self.factors]

    def cross_violations(self) -> List[Tuple[int, int]]:
        """Cross-factor slim pairs breaking the direct-sum condition (should be empty)."""
        h = self.source
        owner = {x: i for i, f in enumerate(self.factors) for x in f.slim}
        bad = []
        for x in h.slim_vertices:
            for y in h.slim_vertices:
                if x < y and owner[x] != owner[y]:
                    shared = h.common_fat(x, y)
                    if shared > 1 or (shared == 1) != h.underlying.has_edge(x, y):
                        bad.append((x, y))
        return bad


def decompose(h: HoffmanGraph) -> FactorDecomposition:
    """Finest slim partition compatible with the direct-sum condition."""
    slim = h.slim_vertices
    parent = {x: x for x in slim}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, x in enumerate(slim):
        for y in slim[i + 1 :]:
            if forced_together(h, x, y):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    groups: Dict[int, List[int]] = {}
    for x in slim:
        groups.setdefault(find(x), []).append(x)
    factors = []
    for members in sorted(groups.values()):
        sub, verts = _generated(h, members)
        factors.append(Factor(tuple(members), sub, tuple(verts)))
    return FactorDecomposition(h, factors)


# Indecomposable shapes that survive the determinant and quotient arguments.

def g3_shape() -> HoffmanGraph:
    """Two non-adjacent slim vertices sharing one fat vertex, each with a private one."""
    return make_hoffman(Graph(2, [0, 0], ["x1", "x2"]), [[0], [0, 1], [1]])


def g4_shape() -> HoffmanGraph:
    """Two adjacent slim vertices sharing both of their fat vertices."""
    return make_hoffman(Graph.from_edges(2, [(0, 1)], ["x", "y"]), [[0, 1], [0, 1]], ["K1", "K2"])


def g5_shape() -> HoffmanGraph:
    """One slim vertex with three fat neighbours."""
    return make_hoffman(Graph(1, [0], ["x"]), [[0], [0], [0]], ["I1", "I2", "I3"])


G3, G4, G5, OTHER = "G3", "G4", "G5", "OTHER"


def factor_shape(factor: HoffmanGraph) -> str:
    slim, fat = factor.slim_vertices, factor.fat_vertices
    if len(slim) == 1 and len(fat) == 3:
        return G5
    if len(slim) != 2:
        return OTHER
    x, y = slim
    adjacent = factor.underlying.has_edge(x, y)
    shared = factor.common_fat(x, y)
    fx, fy = len(factor.fat_neighbors(x)), len(factor.fat_neighbors(y))
    if adjacent and len(fat) == 2 and shared == 2:
        return G4
    if not adjacent and len(fat) == 3 and shared == 1 and fx == fy == 2:
        return G3
    return OTHER


@dataclass(frozen=True)
class FactorType:
    tag: str
    quasi_clique_orders: Tuple[int, ...]
    vertex_types: Tuple[Tuple[int, Optional[int]], ...]


def g5_type(t: int, orders: Sequence[int]) -> Optional[int]:
    b = tuple(sorted(orders, reverse=True))
    table = {
        (2 * t + 2, 2 * t + 1, 1): 3,
        (2 * t + 2, 2 * t, 2): 4,
        (2 * t + 1, 2 * t + 1, 2): 5,
    }
    return table.get(b)


def classify_factor(factor: HoffmanGraph, t: int, orders: Sequence[int]) -> FactorType:
    """Shape tag and per-slim-vertex Type (1..5, or None).

    ``orders[i]`` is the quasi-clique order, measured in the ambient Hoffman
    graph, of the i-th fat vertex of ``factor``.
    """
    fat = factor.fat_vertices
    if len(orders) != len(fat):
        raise HoffmanError("need one quasi-clique order per fat vertex")
    order_of = dict(zip(fat, orders))
    tag = factor_shape(factor)
    full = 2 * t + 2
    types: Dict[int, Optional[int]] = {x: None for x in factor.slim_vertices}
    if tag == G4 and all(o == full for o in orders):
        types = {x: 2 for x in types}
    elif tag == G3:
        for x in types:
            if all(order_of[f] == full for f in factor.fat_neighbors(x)):
                types[x] = 1
    elif tag == G5:
        types = {x: g5_type(t, orders) for x in types}
    return FactorType(tag, tuple(sorted(orders)), tuple(sorted(types.items())))


def classify_all(h: HoffmanGraph, t: int) -> List[FactorType]:
    """Classify every factor of ``h`` using quasi-clique orders measured in ``h``."""
    out = []
    for fac in decompose(h).factors:
        sub = fac.hoffman
        orders = [quasi_clique_order(h, fac.vertices[f]) for f in sub.fat_vertices]
        out.append(classify_factor(sub, t, orders))
    return out


def fat_pair_violations(h: HoffmanGraph) -> List[dict]:
    """Fat pairs sharing more than two slim vertices, or two that do not form a G4 factor."""
    decomposition = decompose(h)
    owner = {x: i for i, f in enumerate(decomposition.factors) for x in f.slim}
    bad = []
    fat = h.fat_vertices
    for i, f1 in enumerate(fat):
        for f2 in fat[i + 1 :]:
            shared = h.common_slim(f1, f2)
            if len(shared) <= 1:
                continue
            ok = False
            if len(shared) == 2:
                x, y = shared
                if h.underlying.has_edge(x, y) and owner[x] == owner[y]:
                    fac = decomposition.factors[owner[x]]
                    ok = fac.slim == (x, y) and factor_shape(fac.hoffman) == G4
            if not ok:
                bad.append(
                    {
                        "fat": [h.label(f1), h.label(f2)],
                        "shared_slim": [h.label(v) for v in shared],
                    }
                )
    return bad


def line_hoffman_from_cliques(g: Graph, cliques: Sequence[Sequence[int]]) -> HoffmanGraph:
    """Attach one fat vertex to each given clique of ``g``."""
    for c in cliques:
        for i, u in enumerate(c):
            for v in c[i + 1 :]:
                if not g.has_edge(u, v):
                    raise HoffmanError(f"{g.labels[u]} and {g.labels[v]} are not adjacent")
    labels = [f"C{i + 1}" for i in range(len(cliques))]
    taken = set(g.labels)
    return make_hoffman(g, cliques, _unique_labels(taken, labels))
