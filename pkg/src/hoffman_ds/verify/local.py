"""Checks that only need the adjacency matrix of the candidate."""
from __future__ import annotations

from typing import Optional

import numpy as np

from ..graph import Graph
from ..linalg import Spectrum, is_psd, matrix_identity_check
from ..spectral import graph_spectrum
from .report import FAIL, ON_GRAPH, PASS, SKIP, ReportEntry
from .target import TargetParams, target_spectrum


def verify_spectrum(g: Graph, t: int, spec: Optional[Spectrum] = None) -> ReportEntry:
    want = target_spectrum(t)
    got = spec if spec is not None else graph_spectrum(g)
    ok = got.dim == want.dim and got.integer_roots == want.integer_roots and got.is_integral
    return ReportEntry(
        "spectrum",
        {"t": t, "n": g.n},
        PASS if ok else FAIL,
        ON_GRAPH,
        f"spectrum {got.format()}",
        None if ok else {"expected": want.format(), "observed": got.format()},
    )


def verify_hoffman_polynomial(g: Graph, t: int) -> ReportEntry:
    """A^3 + c2 A^2 + c1 A + c0 I = rhs J, with coefficients rebuilt from the eigenvalues."""
    p = TargetParams(t)
    printed = (1, 5 - 2 * t, 7 - 8 * t, 3 - 6 * t)
    derived = p.hoffman_coefficients()
    rhs = p.hoffman_rhs()
    coeff_ok = derived == printed and rhs == 16 * t + 8
    holds = matrix_identity_check(g.adjacency_matrix(), derived, rhs)
    ok = coeff_ok and holds
    return ReportEntry(
        "hoffman-polynomial",
        {"t": t, "coefficients": list(derived), "rhs": rhs},
        PASS if ok else FAIL,
        ON_GRAPH,
        f"A^3{derived[1]:+d}A^2{derived[2]:+d}A{derived[3]:+d}I = {rhs}J "
        + ("holds entrywise" if holds else "fails"),
        None if ok else {"coefficients_match": coeff_ok, "identity_holds": holds},
    )


def walk_count_expected(t: int, a: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """The A^3 entries forced by the Hoffman identity, from adjacency and common neighbours."""
    n = a.shape[0]
    expected = np.where(a == 1, 24 * t + 1 - (5 - 2 * t) * a2, 16 * t + 8 - (5 - 2 * t) * a2)
    expected[np.arange(n), np.arange(n)] = 8 * t * t + 4 * t
    return expected


def verify_walk_counts(g: Graph, t: int, cospectral: Optional[bool] = None) -> ReportEntry:
    params = {"t": t, "n": g.n}
    if cospectral is None:
        cospectral = verify_spectrum(g, t).verdict == PASS
    if not cospectral:
        return ReportEntry("walk-counts", params, SKIP, ON_GRAPH, "candidate is not cospectral")
    a = g.adjacency_matrix()
    a2 = a @ a
    a3 = a2 @ a
    expected = walk_count_expected(t, a, a2)
    bad = np.argwhere(a3 != expected)
    if bad.size:
        x, y = (int(v) for v in bad[0])
        return ReportEntry(
            "walk-counts",
            params,
            FAIL,
            ON_GRAPH,
            f"{len(bad)} entries of A^3 disagree",
            {
                "pair": [g.labels[x], g.labels[y]],
                "expected": int(expected[x, y]),
                "observed": int(a3[x, y]),
            },
        )
    return ReportEntry(
        "walk-counts",
        params,
        PASS,
        ON_GRAPH,
        f"all {g.n * g.n} entries of A^3 match; diagonal {8 * t * t + 4 * t}",
    )


def verify_mu_bound(g: Graph, t: int) -> ReportEntry:
    """M = (A - (2t-1)I)(A + I) is PSD and non-adjacent pairs share at most 2t+2 neighbours."""
    params = {"t": t, "n": g.n}
    a = g.adjacency_matrix()
    n = g.n
    eye = np.eye(n, dtype=np.int64)
    m = (a - (2 * t - 1) * eye) @ (a + eye)
    a2 = a @ a
    # entry pattern of M: 2t+2 on the diagonal when k = 4t+1, lambda - 2(t-1), mu
    pattern = np.where(a == 1, a2 - 2 * (t - 1), a2)
    pattern[np.arange(n), np.arange(n)] = np.diag(a2) - (2 * t - 1)
    entries_ok = bool(np.array_equal(m, pattern))
    diag = sorted(set(int(v) for v in np.diag(m)))
    psd = is_psd(m)
    nonadj = (a == 0) & ~eye.astype(bool)
    mus = sorted(set(int(v) for v in a2[nonadj]))
    over = np.argwhere(nonadj & (a2 > 2 * t + 2))
    witness = {}
    if not psd:
        witness["psd"] = False
    if diag != [2 * t + 2]:
        witness["diagonal"] = diag
    if not entries_ok:
        witness["entry_pattern"] = False
    if over.size:
        x, y = (int(v) for v in over[0])
        witness["pair"] = [g.labels[x], g.labels[y]]
        witness["mu"] = int(a2[x, y])
        witness["bound"] = 2 * t + 2
        # the 2x2 principal minor on that pair is negative
        witness["minor"] = int(m[x, x] * m[y, y] - m[x, y] ** 2)
    ok = not witness
    return ReportEntry(
        "mu-bound",
        params,
        PASS if ok else FAIL,
        ON_GRAPH,
        f"M psd={psd}, diagonal {diag}, non-adjacent mu values {mus} (bound {2 * t + 2})",
        witness or None,
    )

