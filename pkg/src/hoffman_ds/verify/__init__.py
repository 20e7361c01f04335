"""Mechanical checks of the spectral characterisation, one report entry per ingredient."""
from .case1 import verify_case1, verify_line_hoffman
from .case2 import case2_quotient, case2_witness_graph, refute_case2
from .counting import CountingSolution, enumerate_counting_cases
from .determinants import det_M1, det_M2, matrix_M1, matrix_M2, sweep_determinants
from .local import verify_hoffman_polynomial, verify_mu_bound, verify_spectrum, verify_walk_counts
from .oracle import brute_force_ds_t1
from .pipeline import verify_all
from .quasi_cliques import verify_clique_bounds, verify_g5_orders
from .report import ReportEntry, VerificationReport
from .target import TargetParams, target_graph, target_spectrum

__all__ = [
    "CountingSolution",
    "ReportEntry",
    "TargetParams",
    "VerificationReport",
    "brute_force_ds_t1",
    "case2_quotient",
    "case2_witness_graph",
    "det_M1",
    "det_M2",
    "enumerate_counting_cases",
    "matrix_M1",
    "matrix_M2",
    "refute_case2",
    "sweep_determinants",
    "target_graph",
    "target_spectrum",
    "verify_all",
    "verify_case1",
    "verify_clique_bounds",
    "verify_g5_orders",
    "verify_hoffman_polynomial",
    "verify_line_hoffman",
    "verify_mu_bound",
    "verify_spectrum",
    "verify_walk_counts",
]
