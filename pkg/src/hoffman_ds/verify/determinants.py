"""Principal 3x3 minors of M that rule out the two remaining four-fat factors."""
from __future__ import annotations

from typing import Iterator, List, Tuple

from ..linalg import det
from .report import ARITHMETIC, FAIL, PASS, ReportEntry


def det_M1(t: int, lam: int, mu: int) -> int:
    return (
        -32 * t**3
        - 8 * lam * t**2
        + ((8 * lam + 32) * mu - 4 * lam**2 - 16 * lam + 32) * t
        - (2 * lam + 8) * mu**2
        + (2 * lam**2 + 8 * lam) * mu
        - 4 * lam**2
        - 8 * lam
    )


def det_M2(t: int, lam: int, mu: int) -> int:
    return (
        -32 * t**3
        - (8 * lam + 16) * t**2
        + ((8 * lam + 32) * mu - 4 * lam**2 - 20 * lam + 14) * t
        - (2 * lam + 8) * mu**2
        + (2 * lam**2 + 10 * lam + 8) * mu
        - 4 * lam**2
        - 12 * lam
        - 2
    )


def _minor(t: int, lam: int, mu: int, other: int) -> List[List[int]]:
    d = 2 * t + 2
    b = -2 * (t - 1) + lam
    return [[d, other, mu], [other, d, b], [mu, b, d]]


def matrix_M1(t: int, lam: int, mu: int) -> List[List[int]]:
    """Rows x1, x2, x4; the two mu entries sum to 4t + lambda."""
    return _minor(t, lam, mu, 4 * t + lam - mu)


def matrix_M2(t: int, lam: int, mu: int) -> List[List[int]]:
    """As matrix_M1 with the mu entries summing to 4t + 1 + lambda."""
    return _minor(t, lam, mu, 4 * t + 1 + lam - mu)


def m1_points(t: int) -> Iterator[Tuple[int, int]]:
    for lam in range(5):
        for mu in range(2 * t - 2 + lam, 2 * t + lam // 2 + 1):
            yield lam, mu


def m2_points(t: int) -> Iterator[Tuple[int, int]]:
    for lam in range(5):
        for mu in range(2 * t - 1 + lam, 2 * t + (1 + lam) // 2 + 1):
            yield lam, mu


def sweep_determinants(t_max: int, t_min: int = 2) -> ReportEntry:
    """Both cubics negative on every admissible (t, lambda, mu), matching Bareiss on the matrix."""
    points = 0
    for t in range(t_min, t_max + 1):
        for name, formula, build, grid in (
            ("M1", det_M1, matrix_M1, m1_points),
            ("M2", det_M2, matrix_M2, m2_points),
        ):
            for lam, mu in grid(t):
                points += 1
                value = formula(t, lam, mu)
                assembled = det(build(t, lam, mu))
                if value != assembled or value >= 0:
                    return ReportEntry(
                        "determinant-sweep",
                        {"t_min": t_min, "t_max": t_max},
                        FAIL,
                        ARITHMETIC,
                        f"{name} fails at t={t}, lambda={lam}, mu={mu}",
                        {
                            "matrix": name,
                            "point": [t, lam, mu],
                            "formula": value,
                            "assembled": assembled,
                        },
                    )
    return ReportEntry(
        "determinant-sweep",
        {"t_min": t_min, "t_max": t_max},
        PASS,
        ARITHMETIC,
        f"det(M1) < 0 and det(M2) < 0 at all {points} points; formula equals assembled determinant",
    )
