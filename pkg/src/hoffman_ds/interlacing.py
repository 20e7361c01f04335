"""Partitions, quotient matrices, eigenvalue interlacing and divisibility."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .graph import Graph
from .linalg import Spectrum, char_poly, compare, poly
from .linalg.exact import faddeev_leverrier


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint cover of range(n) by non-empty classes."""

    n: int
    classes: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, classes: Sequence[Sequence[int]]) -> "Partition":
        seen = set()
        out = []
        for c in classes:
            members = tuple(sorted(c))
            if not members:
                raise PartitionError("partition classes must be non-empty")
            for v in members:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} out of range for n={n}")
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in two classes")
                seen.add(v)
            out.append(members)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise PartitionError(f"vertices {missing[:5]} are not covered")
        return cls(n, tuple(out))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple((v,) for v in range(n)))

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class QuotientMatrix:
    entries: Tuple[Tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def dim(self) -> int:
        return len(self.entries)

    def rows(self) -> List[List[Union[int, Fraction]]]:
        return [[poly._demote(v) for v in row] for row in self.entries]

    def char_poly(self) -> List[Union[int, Fraction]]:
        return faddeev_leverrier(self.rows())

    def spectrum(self) -> Spectrum:
        return Spectrum.from_charpoly(self.char_poly())


def _block_counts(g: Graph, p: Partition) -> List[List[List[int]]]:
    masks = []
    for c in p.classes:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    return [[[(g.rows[v] & mj).bit_count() for v in ci] for mj in masks] for ci in p.classes]


def _check(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise PartitionError(f"partition covers {p.n} vertices, graph has {g.n}")


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    """Entry (i, j) is the average number of neighbours in class j of a vertex in class i."""
    _check(g, p)
    counts = _block_counts(g, p)
    entries = tuple(
        tuple(Fraction(sum(block), len(block)) for block in row) for row in counts
    )
    equitable = all(len(set(block)) == 1 for row in counts for block in row)
    return QuotientMatrix(entries, equitable)


def is_equitable(g: Graph, p: Partition) -> bool:
    _check(g, p)
    return all(len(set(block)) == 1 for row in _block_counts(g, p) for block in row)


def check_interlacing(outer: Spectrum, inner: Spectrum) -> bool:
    """lambda_i >= mu_i >= lambda_{n-m+i} for every i, compared exactly."""
    lam = outer.eigenvalues()
    mu = inner.eigenvalues()
    n, m = len(lam), len(mu)
    if m > n:
        return False
    return all(
        compare(lam[i], mu[i]) >= 0 and compare(mu[i], lam[n - m + i]) >= 0 for i in range(m)
    )


def is_tight_interlacing(outer: Spectrum, inner: Spectrum) -> bool:
    """Some split j: the top j inner values equal the top of outer, the rest its bottom."""
    lam = outer.eigenvalues()
    mu = inner.eigenvalues()
    n, m = len(lam), len(mu)
    if m > n:
        return False
    top = [compare(mu[i], lam[i]) == 0 for i in range(m)]
    bottom = [compare(mu[i], lam[n - m + i]) == 0 for i in range(m)]
    return any(all(top[:j]) and all(bottom[j:]) for j in range(m + 1))


def divides_spectrum(cp: Sequence, target: Spectrum) -> bool:
    """Does ``cp`` divide the characteristic polynomial of ``target``?

    For integral targets the check deflates ``cp`` by the target's roots, so
    the (possibly huge) target polynomial is never expanded.
    """
    if not target.is_integral:
        return poly.divides(cp, target.reconstruct())
    work = poly.monic(cp)
    for root, mult in target.integer_roots:
        for _ in range(mult):
            if len(work) == 1:
                break
            q, rem = poly.divide_linear(work, root)
            if rem != 0:
                break
            work = q
    return len(work) == 1


def charpoly_divides(b, a) -> bool:
    """Exact divisibility of char(b) into char(a).

    ``b`` is a QuotientMatrix or square matrix; ``a`` is a square matrix, a
    Graph or a Spectrum.
    """
    cb = b.char_poly() if isinstance(b, QuotientMatrix) else char_poly(b)
    if isinstance(a, Spectrum):
        return divides_spectrum(cb, a)
    if isinstance(a, Graph):
        a = a.adjacency_matrix()
    return poly.divides(cb, char_poly(a))
