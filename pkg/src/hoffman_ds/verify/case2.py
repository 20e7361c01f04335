"""The configuration with one quasi-clique of order 2t+2 and 2t+2 of order 2t+1."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import List, Tuple

from ..graph import Graph
from ..interlacing import Partition, check_interlacing, divides_spectrum, quotient_matrix
from ..linalg import Spectrum, poly
from ..linalg.exact import faddeev_leverrier
from .report import ARITHMETIC, FAIL, PASS, ReportEntry
from .target import TargetParams, target_spectrum

# interlacing against the full target needs its eigenvalue list; skip beyond this order
INTERLACING_LIMIT = 5000


def case2_quotient(t: int, alpha) -> List[List[Fraction]]:
    """Quotient on {V1, V2, V3, V4}; alpha is the mean V3 -> V3 degree."""
    if t < 2:
        raise ValueError("the quotient needs t >= 2")
    alpha = Fraction(alpha)
    spill = 4 * t - 1 - alpha
    back = 2 * spill / (t - 1)
    return [
        [Fraction(v) for v in (1, 2 * t, 2 * t, 0)],
        [Fraction(v) for v in (2, 2 * t - 1, 2, 2 * t - 2)],
        [Fraction(1), Fraction(1), alpha, spill],
        [Fraction(0), Fraction(2), back, 4 * t - 1 - back],
    ]


def alpha_forcing(t: int) -> dict:
    """Walks of length 3 between the twin pair in Q pin down every mu, hence alpha.

    Of the 2t common neighbours z outside the pair's clique, ``c`` have
    mu(x1, z) = 4 and the rest 3; alpha = 2t + c / (2t).
    """
    walks = 24 * t + 1 - (5 - 2 * t) * (2 * t)
    base = (4 * t + 1) + 2 * t * (2 * t + 1)
    feasible = [c for c in range(2 * t + 1) if base + 4 * c + 3 * (2 * t - c) == walks]
    return {
        "walks": walks,
        "walks_closed_form": walks == 4 * t * t + 14 * t + 1,
        "feasible_counts": feasible,
        "alpha": [2 * t + Fraction(c, 2 * t) for c in feasible],
        "shortfall_all_three": walks - (base + 3 * 2 * t),
    }


def expected_case2_charpoly(t: int) -> List[int]:
    quad = [1, -(2 * t - 4), 5 - 4 * t]
    return poly.mul(poly.from_roots([(4 * t + 1, 1), (2 * t - 1, 1)]), quad)


def refute_case2(t: int) -> ReportEntry:
    params = {"t": t}
    forcing = alpha_forcing(t)
    alpha = 2 * t + 1
    b = case2_quotient(t, alpha)
    rows = [[poly._demote(v) for v in r] for r in b]
    cp = faddeev_leverrier(rows)
    spec = Spectrum.from_charpoly(cp)
    disc = t * t - 1
    target = target_spectrum(t)
    checks = {
        "alpha_forced": forcing["walks_closed_form"]
        and forcing["feasible_counts"] == [2 * t]
        and forcing["alpha"] == [alpha]
        and forcing["shortfall_all_three"] == 2 * t,
        "integral_entries": all(isinstance(v, int) for r in rows for v in r),
        "charpoly": cp == expected_case2_charpoly(t),
        "integer_roots": spec.integer_roots == sorted([(4 * t + 1, 1), (2 * t - 1, 1)], reverse=True),
        "irrational_pair": isqrt(disc) ** 2 != disc and poly.degree(spec.remainder) == 2,
        "not_divisor": not divides_spectrum(cp, target),
    }
    if TargetParams(t).n <= INTERLACING_LIMIT:
        checks["interlaces"] = check_interlacing(target, spec)
    failed = sorted(k for k, v in checks.items() if not v)
    roots = ", ".join(f"{x:.6g}" for x in spec.numeric_roots)
    return ReportEntry(
        "case2-refutation",
        params,
        FAIL if failed else PASS,
        ARITHMETIC,
        f"alpha = 2t+1 forced (A^3 = {forcing['walks']}); quotient eigenvalues "
        f"{4 * t + 1}, {2 * t - 1}, t-2 +- sqrt({disc}) ~ [{roots}] do not divide the target"
        if not failed
        else f"failed: {', '.join(failed)}",
        {"failed": failed, "charpoly": poly.to_strings(cp)} if failed else None,
    )


def _omega(t: int) -> List[str]:
    return [f"x{i}" for i in range(1, t + 2)] + [f"x{i}'" for i in range(1, t + 2)]


def _partner(v: str) -> str:
    return v[:-1] if v.endswith("'") else v + "'"


def case2_witness_graph(t: int) -> Tuple[Graph, Partition]:
    """A (4t+1)-regular graph realising the equitable quotient at alpha = 2t+1.

    Vertices are Omega (x_i, x_i') and the 2-subsets of Omega other than
    {x_i, x_i'}.  Omega is a clique, x ~ {x, y}, 2-subsets meeting in one
    point are adjacent, and {a, b} ~ {a', b'} closes the degrees.
    """
    omega = _omega(t)
    pairs = [
        (a, b) for a, b in combinations(omega, 2) if _partner(a) != b
    ]
    labels = omega + [f"{a}{b}" for a, b in pairs]
    index = {v: i for i, v in enumerate(omega)}
    pair_index = {frozenset(p): len(omega) + i for i, p in enumerate(pairs)}
    edges = list(combinations(range(len(omega)), 2))
    for p, j in pair_index.items():
        for v in p:
            edges.append((index[v], j))
        twin = pair_index[frozenset(_partner(v) for v in p)]
        if j < twin:
            edges.append((j, twin))
    for p, q in combinations(pair_index, 2):
        if len(p & q) == 1:
            edges.append((pair_index[p], pair_index[q]))
    g = Graph.from_edges(len(labels), edges, labels)
    head = {"x1", "x1'"}
    v1 = [index[v] for v in sorted(head)]
    v2 = [index[v] for v in omega if v not in head]
    v3 = [j for p, j in pair_index.items() if p & head]
    v4 = [j for p, j in pair_index.items() if not p & head]
    return g, Partition.of(g.n, [v1, v2, v3, v4])


def case2_witness_check(t: int) -> dict:
    g, part = case2_witness_graph(t)
    qm = quotient_matrix(g, part)
    return {
        "regular": g.regular_degree() == 4 * t + 1,
        "order": g.n == TargetParams(t).n,
        "equitable": qm.equitable,
        "quotient_matches": [list(r) for r in qm.entries] == case2_quotient(t, 2 * t + 1),
    }
