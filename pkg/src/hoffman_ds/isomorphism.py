"""Graph isomorphism by joint colour refinement and individualisation.

Sized for the structured graphs of this package (a few hundred vertices);
no canonical forms are produced.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, List, Optional, Sequence, Tuple

from .graph import Graph, common_neighbors, iter_bits

Coloring = List[int]


def _signature(g: Graph, colors: Coloring, v: int) -> Tuple:
    cnt = Counter(colors[u] for u in iter_bits(g.rows[v]))
    return colors[v], tuple(sorted(cnt.items()))


def _refine(g: Graph, h: Graph, cg: Coloring, ch: Coloring) -> Optional[Tuple[Coloring, Coloring]]:
    """Refine both colourings with a shared palette; None once they diverge."""
    ncolors = len(set(cg))
    while True:
        sg = [_signature(g, cg, v) for v in range(g.n)]
        sh = [_signature(h, ch, v) for v in range(h.n)]
        if Counter(sg) != Counter(sh):
            return None
        palette = {s: i for i, s in enumerate(sorted(set(sg)))}
        cg = [palette[s] for s in sg]
        ch = [palette[s] for s in sh]
        if len(palette) == ncolors:
            return cg, ch
        ncolors = len(palette)


def _search(g: Graph, h: Graph, cg: Coloring, ch: Coloring) -> Optional[List[int]]:
    refined = _refine(g, h, cg, ch)
    if refined is None:
        return None
    cg, ch = refined
    classes = Counter(cg)
    if all(size == 1 for size in classes.values()):
        where = {c: w for w, c in enumerate(ch)}
        mapping = [where[c] for c in cg]
        for v in range(g.n):
            image = 0
            for u in iter_bits(g.rows[v]):
                image |= 1 << mapping[u]
            if image != h.rows[mapping[v]]:
                return None
        return mapping
    # individualise the first vertex of the smallest non-trivial class
    target = min((size, c) for c, size in classes.items() if size > 1)[1]
    v = cg.index(target)
    fresh = max(cg) + 1
    for w in (u for u in range(h.n) if ch[u] == target):
        ng, nh = list(cg), list(ch)
        ng[v] = fresh
        nh[w] = fresh
        found = _search(g, h, ng, nh)
        if found is not None:
            return found
    return None


def find_isomorphism(g: Graph, h: Graph) -> Optional[List[int]]:
    """A list ``m`` with u ~ v in g iff m[u] ~ m[v] in h, or None."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    return _search(g, h, g.degrees(), h.degrees())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _triangles_at(g: Graph, v: int) -> int:
    return sum(common_neighbors(g, v, u) for u in iter_bits(g.rows[v])) // 2


def _k4_at(g: Graph, v: int) -> int:
    nb = g.rows[v]
    total = 0
    for u in iter_bits(nb):
        inner = nb & g.rows[u]
        for w in iter_bits(inner):
            if w > u:
                total += (inner & g.rows[w]).bit_count()
    return total // 3


def _neighbourhood_degrees(g: Graph, v: int) -> Tuple[int, ...]:
    nb = g.rows[v]
    return tuple(sorted((g.rows[u] & nb).bit_count() for u in iter_bits(nb)))


INVARIANTS: Sequence[Tuple[str, Callable[[Graph, int], object]]] = (
    ("degree", lambda g, v: g.degree(v)),
    ("triangles through vertex", _triangles_at),
    ("4-cliques through vertex", _k4_at),
    ("degrees inside neighbourhood", _neighbourhood_degrees),
)


def distinguishing_invariant(g: Graph, h: Graph) -> Optional[dict]:
    """First per-vertex invariant whose multiset differs between g and h."""
    if g.n != h.n:
        return {"invariant": "order", "left": g.n, "right": h.n}
    for name, fn in INVARIANTS:
        left = Counter(fn(g, v) for v in range(g.n))
        right = Counter(fn(h, v) for v in range(h.n))
        if left != right:
            return {
                "invariant": name,
                "left": sorted(left.items(), key=repr),
                "right": sorted(right.items(), key=repr),
            }
    return None
