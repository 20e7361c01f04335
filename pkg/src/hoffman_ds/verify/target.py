"""Parameters of the 2-clique extension of the square grid."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from ..families import two_clique_extended_grid
from ..graph import Graph
from ..linalg import Spectrum, poly


@dataclass(frozen=True)
class TargetParams:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")

    @property
    def n(self) -> int:
        return 2 * (self.t + 1) ** 2

    @property
    def k(self) -> int:
        return 4 * self.t + 1

    @property
    def eta(self) -> Tuple[int, int, int, int]:
        t = self.t
        return (4 * t + 1, 2 * t - 1, -1, -3)

    @property
    def multiplicities(self) -> Tuple[int, int, int, int]:
        t = self.t
        return (1, 2 * t, (t + 1) ** 2, t * t)

    def hoffman_coefficients(self) -> Tuple[int, int, int, int]:
        """(c3, c2, c1, c0) of the product of (x - eta_i) over the non-principal eigenvalues."""
        c = poly.from_roots([(e, 1) for e in self.eta[1:]])
        return tuple(int(v) for v in c)  # type: ignore[return-value]

    def hoffman_rhs(self) -> int:
        """prod (k - eta_i) / n, the multiple of J in the Hoffman identity."""
        prod = 1
        for e in self.eta[1:]:
            prod *= self.k - e
        if prod % self.n:
            raise ArithmeticError("Hoffman constant is not integral")
        return prod // self.n


def target_spectrum(t: int) -> Spectrum:
    p = TargetParams(t)
    return Spectrum.from_roots(list(zip(p.eta, p.multiplicities)))


def target_graph(t: int) -> Graph:
    return two_clique_extended_grid(t)
