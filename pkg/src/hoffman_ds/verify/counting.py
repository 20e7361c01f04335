"""Double counting of (vertex, quasi-clique) incidences by quasi-clique order."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .report import ARITHMETIC, FAIL, INFO, PASS, ReportEntry


@dataclass(frozen=True)
class CountingSolution:
    """Numbers of quasi-cliques of order 2t, 2t+1, 2t+2 and, once forced, of vertices by Type."""

    t: int
    q_2t: int
    q_2t1: int
    q_2t2: int
    n: Optional[Tuple[int, int, int, int, int]] = None

    @property
    def q(self) -> Tuple[int, int, int]:
        return self.q_2t, self.q_2t1, self.q_2t2

    def identities_hold(self) -> bool:
        if self.n is None:
            return True
        t = self.t
        n1, n2, n3, n4, n5 = self.n
        return (
            n4 == 2 * t * self.q_2t
            and n3 + 2 * n5 == (2 * t + 1) * self.q_2t1
            and 2 * n1 + 2 * n2 + n3 + n4 == (2 * t + 2) * self.q_2t2
            and n1 + n2 + n3 + n4 + n5 == 2 * (t + 1) ** 2
        )

    def to_json(self) -> dict:
        out = {"q": list(self.q)}
        if self.n is not None:
            out["n"] = list(self.n)
        return out


def type1_triangle_bound(t: int) -> int:
    """Largest (A^3)_xx a Type 1 vertex could have: twice its triangle count bound."""
    return 2 * (comb(2 * t + 1, 2) - 1) + 2 * comb(2 * t, 2) + 2 * (2 * t)


def _forced_types(t: int, q: Tuple[int, int, int]) -> Optional[Tuple[int, int, int, int, int]]:
    q_2t, q_2t1, q_2t2 = q
    n = 2 * (t + 1) ** 2
    if q == (0, 0, 2 * t + 2):
        # no Type 3/4/5; Type 1 is excluded by the triangle count at every vertex
        if type1_triangle_bound(t) >= 8 * t * t + 4 * t:
            return None
        return (0, n, 0, 0, 0)
    if q == (0, 2 * t + 2, 1):
        # Types 1 and 2 need two quasi-cliques of order 2t+2
        n3 = (2 * t + 2) * q_2t2
        return (0, 0, n3, 0, n - n3)
    return None


def raw_solutions(t: int) -> List[Tuple[int, int, int]]:
    """Non-negative solutions of 2t a + (2t+1) b + (2t+2) c = (2t+2)^2."""
    total = (2 * t + 2) ** 2
    out = []
    for a in range(total // (2 * t) + 1):
        for b in range((total - 2 * t * a) // (2 * t + 1) + 1):
            rest = total - 2 * t * a - (2 * t + 1) * b
            if rest % (2 * t + 2) == 0:
                out.append((a, b, rest // (2 * t + 2)))
    return out


def enumerate_counting_cases(t: int) -> List[CountingSolution]:
    out = []
    for q_2t, q_2t1, q_2t2 in raw_solutions(t):
        if (q_2t2 - q_2t) % (2 * t + 1) != 1:
            continue
        # Type 4 vertices each lie in one quasi-clique of order 2t+2
        if 2 * t * q_2t > (2 * t + 2) * q_2t2:
            continue
        # every vertex of an order-2t quasi-clique sits in its own order-(2t+2) one
        if q_2t > 0 and q_2t2 < 2 * t:
            continue
        q = (q_2t, q_2t1, q_2t2)
        out.append(CountingSolution(t, q_2t, q_2t1, q_2t2, _forced_types(t, q)))
    return out


def verify_counting_cases(t: int) -> ReportEntry:
    sols = enumerate_counting_cases(t)
    params = {"t": t}
    witness = {"solutions": [s.to_json() for s in sols]}
    consistent = all(s.identities_hold() for s in sols)
    if t <= 4:
        return ReportEntry(
            "counting-cases",
            params,
            INFO if consistent else FAIL,
            ARITHMETIC,
            f"t <= 4 lies outside the hypothesis t > 4; {len(sols)} solutions",
            witness,
        )
    want = [
        ((0, 0, 2 * t + 2), (0, 2 * (t + 1) ** 2, 0, 0, 0)),
        ((0, 2 * t + 2, 1), (0, 0, 2 * t + 2, 0, 2 * t * (t + 1))),
    ]
    got = sorted((s.q, s.n) for s in sols)
    ok = consistent and got == sorted(want)
    return ReportEntry(
        "counting-cases",
        params,
        PASS if ok else FAIL,
        ARITHMETIC,
        "; ".join(
            f"q={s.q} n={s.n}" for s in sols
        ),
        None if ok else witness,
    )
