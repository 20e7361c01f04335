"""Run every check for one value of t and collect the verdicts."""
from __future__ import annotations

import time
from typing import Callable, Optional

from ..graph import Graph
from ..spectral import graph_spectrum
from .case1 import line_hoffman_hypothesis, verify_case1, verify_line_hoffman
from .case2 import refute_case2
from .counting import verify_counting_cases
from .determinants import sweep_determinants
from .local import verify_hoffman_polynomial, verify_mu_bound, verify_spectrum, verify_walk_counts
from .quasi_cliques import (
    verify_clique_bounds,
    verify_g3_g4_orders,
    verify_g5_orders,
    verify_quasi_clique_orders,
)
from .report import FAIL, ON_GRAPH, PASS, SKIP, ReportEntry, VerificationReport
from .target import target_graph

DEFAULT_SWEEP_MAX = 1000


def _run(report: VerificationReport, lemma: str, fn: Callable[[], ReportEntry]) -> ReportEntry:
    start = time.perf_counter()
    try:
        entry = fn()
    except Exception as exc:  # a crashing check is a failed check, not a failed run
        entry = ReportEntry(lemma, {"t": report.t}, FAIL, ON_GRAPH, f"error: {exc}", {"error": repr(exc)})
    entry.ms = (time.perf_counter() - start) * 1000
    report.entries.append(entry)
    return entry


def verify_all(
    t: int,
    candidate: Optional[Graph] = None,
    sweep_max: int = DEFAULT_SWEEP_MAX,
    candidate_name: Optional[str] = None,
) -> VerificationReport:
    """Checks run in a fixed order; graph checks are skipped once the spectrum check fails."""
    if t < 2:
        raise ValueError("verify_all needs t >= 2")
    g = candidate if candidate is not None else target_graph(t)
    name = candidate_name or ("2-clique extension of grid" if candidate is None else "candidate")
    report = VerificationReport(t, name)
    spec_entry = _run(report, "spectrum", lambda: verify_spectrum(g, t, graph_spectrum(g)))
    cospectral = spec_entry.verdict == PASS

    def on_graph(lemma: str, fn: Callable[[], ReportEntry]) -> None:
        if cospectral:
            _run(report, lemma, fn)
        else:
            report.entries.append(
                ReportEntry(lemma, {"t": t, "n": g.n}, SKIP, ON_GRAPH, "candidate is not cospectral")
            )

    on_graph("hoffman-polynomial", lambda: verify_hoffman_polynomial(g, t))
    on_graph("walk-counts", lambda: verify_walk_counts(g, t, cospectral=True))
    _run(report, "line-hoffman-hypothesis", lambda: line_hoffman_hypothesis(t))
    on_graph("mu-bound", lambda: verify_mu_bound(g, t))
    _run(report, "determinant-sweep", lambda: sweep_determinants(sweep_max))
    on_graph("clique-structure", lambda: verify_clique_bounds(g, t))
    _run(report, "quasi-clique-order-bound", lambda: verify_quasi_clique_orders(t))
    _run(report, "g3-g4-orders", lambda: verify_g3_g4_orders(t))
    _run(report, "g5-orders", lambda: verify_g5_orders(t))
    _run(report, "counting-cases", lambda: verify_counting_cases(t))
    _run(report, "case2-refutation", lambda: refute_case2(t))
    on_graph("case1-pipeline", lambda: verify_case1(g, t))
    on_graph("line-hoffman-structure", lambda: verify_line_hoffman(g, t))
    return report
