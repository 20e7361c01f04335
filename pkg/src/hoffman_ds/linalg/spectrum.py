"""Exact spectra: integer eigenvalues plus certified real algebraic roots."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import poly
from .exact import NotSymmetricError, as_rows, char_poly, is_symmetric

Number = Union[int, Fraction]
NUMERIC_TOL = 1e-10


class AlgebraicRoot:
    """A real root of a squarefree integer polynomial, isolated in (lo, hi).

    The polynomial is nonzero at both endpoints and has exactly one root
    strictly between them.  ``exact`` is set if bisection ever lands on it.
    """

    __slots__ = ("poly", "lo", "hi", "exact")

    def __init__(self, p: Sequence[int], lo: Fraction, hi: Fraction):
        self.poly = list(p)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.exact: Optional[Fraction] = None

    def refine(self) -> None:
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        s = poly.sign_at(self.poly, mid)
        if s == 0:
            self.exact = mid
            self.lo = self.hi = mid
            return
        if s == poly.sign_at(self.poly, self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width: Fraction) -> None:
        while self.exact is None and self.hi - self.lo > width:
            self.refine()

    def __float__(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        self.refine_to(Fraction(1, 10 ** 13))
        return float((self.lo + self.hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicRoot({poly.format_poly(self.poly)} ~ {float(self):.12g})"


Eigenvalue = Union[int, Fraction, AlgebraicRoot]


def _cmp_rational_root(r: Fraction, a: AlgebraicRoot) -> int:
    while True:
        if a.exact is not None:
            return (r > a.exact) - (r < a.exact)
        if r <= a.lo:
            return -1
        if r >= a.hi:
            return 1
        if poly.sign_at(a.poly, r) == 0:
            return 0
        a.refine()


@functools.lru_cache(maxsize=4096)
def _gcd_cached(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(poly.primitive(poly.gcd_poly(list(p), list(q))))


def _sign_change(p: Sequence[int], lo: Fraction, hi: Fraction) -> bool:
    return poly.sign_at(p, lo) * poly.sign_at(p, hi) < 0


def compare(a: Eigenvalue, b: Eigenvalue) -> int:
    """Exact three-way comparison of eigenvalues."""
    if not isinstance(a, AlgebraicRoot) and not isinstance(b, AlgebraicRoot):
        return (a > b) - (a < b)
    if not isinstance(a, AlgebraicRoot):
        return _cmp_rational_root(Fraction(a), b)
    if not isinstance(b, AlgebraicRoot):
        return -_cmp_rational_root(Fraction(b), a)
    if a.exact is not None:
        return compare(a.exact, b)
    if b.exact is not None:
        return compare(a, b.exact)
    g = _gcd_cached(tuple(a.poly), tuple(b.poly))
    common = len(g) > 1 and _sign_change(g, a.lo, a.hi) and _sign_change(g, b.lo, b.hi)
    while True:
        if a.exact is not None or b.exact is not None:
            return compare(a, b)
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if common:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            # each interval holds at most one root of g, so a shared one is a == b
            if _sign_change(g, lo, hi):
                return 0
        if a.hi - a.lo >= b.hi - b.lo:
            a.refine()
        else:
            b.refine()


def sort_desc(values: Sequence[Eigenvalue]) -> List[Eigenvalue]:
    return sorted(values, key=functools.cmp_to_key(lambda x, y: compare(y, x)))


def isolate_real_roots(f: Sequence[Number]) -> List[AlgebraicRoot]:
    """Isolating intervals for the roots of a squarefree real-rooted polynomial.

    Numeric approximations are certified by sign changes at rational
    separators; sympy's exact isolation is the fallback when they are too
    close to certify.
    """
    ip = poly.primitive(f)
    d = len(ip) - 1
    if d <= 0:
        return []
    bound = Fraction(poly.real_root_bound(ip) + 1)
    approx = _approximate_roots(ip)
    if approx is not None:
        seps = [-bound]
        for x, y in zip(approx, approx[1:]):
            seps.append(Fraction((x + y) / 2))
        seps.append(bound)
        signs = [poly.sign_at(ip, s) for s in seps]
        if all(s != 0 for s in signs) and all(
            signs[i] != signs[i + 1] for i in range(d)
        ):
            return [AlgebraicRoot(ip, seps[i], seps[i + 1]) for i in range(d)]
    return _isolate_sympy(ip)


def _approximate_roots(ip: Sequence[int]) -> Optional[List[float]]:
    lead = ip[0]
    try:
        fl = [float(Fraction(c, lead)) for c in ip]
    except OverflowError:
        return None
    if not all(np.isfinite(fl)):
        return None
    roots = np.roots(fl)
    if roots.size != len(ip) - 1:
        return None
    xs = sorted(float(r.real) for r in roots)
    if any(b - a <= 0 for a, b in zip(xs, xs[1:])):
        return None
    return xs


def _isolate_sympy(ip: Sequence[int]) -> List[AlgebraicRoot]:
    import sympy

    x = sympy.Symbol("x")
    sp = sympy.Poly(list(ip), x, domain="ZZ")
    out = []
    for lo, hi in sp.intervals(sqf=True):
        lo, hi = Fraction(int(lo.p), int(lo.q)), Fraction(int(hi.p), int(hi.q))
        if lo == hi:
            root = AlgebraicRoot(ip, lo, hi)
            root.exact = lo
            out.append(root)
            continue
        # sympy intervals are closed; widen slightly when an endpoint is a root
        while poly.sign_at(ip, lo) == 0 or poly.sign_at(ip, hi) == 0:
            sp_lo, sp_hi = sp.refine_root(lo, hi, eps=(hi - lo) / 4)
            lo, hi = Fraction(int(sp_lo.p), int(sp_lo.q)), Fraction(int(sp_hi.p), int(sp_hi.q))
        out.append(AlgebraicRoot(ip, lo, hi))
    if len(out) != len(ip) - 1:
        raise NotSymmetricError("polynomial is not real-rooted")
    return out


@dataclass
class Spectrum:
    """Eigenvalue multiset of a real-rooted characteristic polynomial.

    ``integer_roots`` holds ``(eigenvalue, multiplicity)`` in descending
    order, ``remainder`` is the monic non-integral part of the polynomial.
    """

    dim: int
    integer_roots: List[Tuple[int, int]]
    remainder: List[Number]
    numeric_roots: List[float] = field(default_factory=list)
    tolerance: float = NUMERIC_TOL
    _algebraic: Optional[List[Tuple[AlgebraicRoot, int]]] = field(
        default=None, repr=False, compare=False
    )

    @classmethod
    def from_charpoly(cls, cp: Sequence[Number]) -> "Spectrum":
        cp = poly.monic(cp)
        dim = len(cp) - 1
        roots, rest = extract_integer_roots(cp)
        spec = cls(dim=dim, integer_roots=roots, remainder=poly.monic(rest))
        spec.numeric_roots = [
            float(r) for r, m in spec.algebraic_roots() for _ in range(m)
        ]
        spec.numeric_roots.sort(reverse=True)
        if spec.reconstruct() != cp:
            raise ArithmeticError("spectrum does not reconstruct the characteristic polynomial")
        return spec

    @classmethod
    def from_roots(cls, roots: Sequence[Tuple[int, int]]) -> "Spectrum":
        merged: Dict[int, int] = {}
        for r, m in roots:
            merged[r] = merged.get(r, 0) + m
        items = sorted(((r, m) for r, m in merged.items() if m > 0), reverse=True)
        return cls(dim=sum(m for _, m in items), integer_roots=items, remainder=[1])

    def algebraic_roots(self) -> List[Tuple[AlgebraicRoot, int]]:
        if self._algebraic is None:
            out = []
            for factor, mult in poly.squarefree_decomposition(self.remainder):
                for root in isolate_real_roots(factor):
                    out.append((root, mult))
            self._algebraic = out
        return self._algebraic

    def reconstruct(self) -> List[Number]:
        return poly.mul(poly.from_roots(self.integer_roots), self.remainder)

    def char_poly(self) -> List[Number]:
        return self.reconstruct()

    @property
    def is_integral(self) -> bool:
        return len(self.remainder) == 1

    def eigenvalues(self) -> List[Eigenvalue]:
        """All eigenvalues with multiplicity, exact, in descending order."""
        vals: List[Eigenvalue] = []
        for r, m in self.integer_roots:
            vals.extend([r] * m)
        for root, m in self.algebraic_roots():
            vals.extend([root] * m)
        return sort_desc(vals)

    def format(self) -> str:
        parts = []
        for r, m in self.integer_roots:
            base = f"({r})" if r < 0 else str(r)
            parts.append(f"{base}^{m}")
        text = " ".join(parts)
        if not self.is_integral:
            approx = ", ".join(f"{x:.10g}" for x in self.numeric_roots)
            extra = f"+ roots of {poly.format_poly(self.remainder)} ~ [{approx}]"
            text = f"{text} {extra}" if text else extra
        return text

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "integer_roots": [[r, m] for r, m in self.integer_roots],
            "remainder": poly.to_strings(self.remainder),
            "numeric_roots": self.numeric_roots,
            "tolerance": self.tolerance,
        }


def extract_integer_roots(cp: Sequence[Number]) -> Tuple[List[Tuple[int, int]], List[Number]]:
    """Split off every integer root of a real-rooted polynomial exactly.

    Candidates are bounded by the real-root bound and filtered by divisibility
    of the constant term of the current deflation.
    """
    work = poly.primitive(cp)
    found: Dict[int, int] = {}
    while len(work) > 1 and work[-1] == 0:
        work.pop()
        found[0] = found.get(0, 0) + 1
    if len(work) > 1:
        bound = poly.real_root_bound(work)
        for r in range(-bound, bound + 1):
            if r == 0:
                continue
            while len(work) > 1 and work[-1] % r == 0:
                q, rem = poly.divide_linear(work, r)
                if rem != 0:
                    break
                work = q
                found[r] = found.get(r, 0) + 1
    roots = sorted(found.items(), reverse=True)
    return roots, work


def spectrum(m) -> Spectrum:
    """Spectrum of a symmetric integer matrix."""
    rows = as_rows(m)
    if not is_symmetric(rows):
        raise NotSymmetricError("spectrum needs a symmetric matrix")
    return Spectrum.from_charpoly(char_poly(rows))
