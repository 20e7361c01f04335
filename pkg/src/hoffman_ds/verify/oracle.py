"""Exhaustive check at t = 1, where every candidate is the complement of a 2-regular graph."""
from __future__ import annotations

from typing import Iterator, List, Tuple

from ..families import complement, cycle, disjoint_union
from ..graph import Graph
from ..isomorphism import is_isomorphic
from ..spectral import adjacency_char_poly
from .report import ON_GRAPH, FAIL, PASS, ReportEntry
from .target import target_graph, target_spectrum


def cycle_types(n: int, smallest: int = 3) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into parts >= 3, largest part first: the 2-regular graphs on n vertices."""
    if n == 0:
        yield ()
        return
    for first in range(n, smallest - 1, -1):
        for rest in cycle_types(n - first, smallest):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def two_regular(parts: Tuple[int, ...]) -> Graph:
    return disjoint_union([cycle(p) for p in parts])


def brute_force_ds_t1() -> ReportEntry:
    want = target_spectrum(1).reconstruct()
    rows: List[dict] = []
    matches = []
    for parts in cycle_types(8):
        g = complement(two_regular(parts))
        hit = adjacency_char_poly(g) == want
        rows.append({"cycles": list(parts), "cospectral": hit})
        if hit:
            matches.append(g)
    unique = len(matches) == 1 and is_isomorphic(matches[0], target_graph(1))
    detail = (
        "unique cospectral graph found; isomorphic to 2-clique extension of 2x2 grid"
        if unique
        else f"{len(matches)} cospectral candidates"
    )
    return ReportEntry(
        "t1-oracle",
        {"t": 1, "n": 8},
        PASS if unique else FAIL,
        ON_GRAPH,
        detail,
        {"candidates": rows},
    )
