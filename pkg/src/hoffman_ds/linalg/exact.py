"""Exact integer/rational matrix routines."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Union

import numpy as np

from . import poly
from .modular import charpoly_multimodular

Number = Union[int, Fraction]
Matrix = List[List[Number]]

# below this order Faddeev-LeVerrier on Python ints is faster than going modular
MODULAR_THRESHOLD = 12


class NotSymmetricError(ValueError):
    pass


def as_rows(m) -> Matrix:
    """Normalise numpy arrays / nested sequences to lists of exact numbers."""
    if isinstance(m, np.ndarray):
        if m.dtype == object:
            return [[_exact(v) for v in row] for row in m]
        return [[int(v) for v in row] for row in m.tolist()]
    return [[_exact(v) for v in row] for row in m]


def _exact(v) -> Number:
    if isinstance(v, (int, Fraction)):
        return v
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise TypeError(f"non-exact matrix entry {v!r}")


def _check_square(rows: Matrix) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return n


def is_symmetric(m) -> bool:
    rows = as_rows(m)
    n = _check_square(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def faddeev_leverrier(m) -> List[Number]:
    """det(xI - M) by the Faddeev-LeVerrier recurrence.

    Over the integers every division by the step index is exact.
    """
    a = as_rows(m)
    n = _check_square(a)
    coeffs: List[Number] = [1]
    mk = [[0] * n for _ in range(n)]
    c: Number = 1
    for k in range(1, n + 1):
        mk = _matmul(a, mk)
        for i in range(n):
            mk[i][i] += c
        am = _matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        if isinstance(tr, int):
            if tr % k:
                raise ArithmeticError("inexact division in Faddeev-LeVerrier")
            c = -(tr // k)
        else:
            c = poly._demote(-Fraction(tr) / k)
        coeffs.append(c)
    return coeffs


def char_poly(m) -> List[Number]:
    """Exact monic characteristic polynomial det(xI - M), descending coefficients."""
    rows = as_rows(m)
    n = _check_square(rows)
    rational = any(isinstance(v, Fraction) for r in rows for v in r)
    if rational or n < MODULAR_THRESHOLD:
        return faddeev_leverrier(rows)
    return charpoly_multimodular(rows)


def det(m) -> Number:
    """Fraction-free (Bareiss) determinant; rationals are scaled to integers first."""
    rows = as_rows(m)
    n = _check_square(rows)
    if n == 0:
        return 1
    scale = Fraction(1)
    a: List[List[int]] = []
    for r in rows:
        den = 1
        for v in r:
            if isinstance(v, Fraction):
                den = den * v.denominator // _gcd(den, v.denominator)
        scale /= den
        a.append([int(v * den) for v in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return poly._demote(sign * a[n - 1][n - 1] * scale)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def is_psd(m) -> bool:
    """Exact positive-semidefiniteness of a symmetric matrix.

    All roots of a real-rooted polynomial are >= 0 iff its coefficients
    alternate in sign (zeros allowed).
    """
    rows = as_rows(m)
    if not is_symmetric(rows):
        raise NotSymmetricError("is_psd needs a symmetric matrix")
    cp = char_poly(rows)
    d = len(cp) - 1
    for idx, c in enumerate(cp):
        power = d - idx
        if (-1) ** (d - power) * c < 0:
            return False
    return True


def matrix_identity_check(a, coeffs: Sequence[int], rhs_scalar: int) -> bool:
    """Check c3 A^3 + c2 A^2 + c1 A + c0 I == rhs * J entrywise, exactly.

    ``coeffs`` is (c3, c2, c1, c0).
    """
    c3, c2, c1, c0 = coeffs
    mat = np.asarray(as_rows(a), dtype=object)
    n = mat.shape[0]
    if n == 0:
        return True
    peak = int(max(abs(int(v)) for v in mat.flat)) if mat.size else 0
    if n ** 2 * max(peak, 1) ** 3 * max(1, *map(abs, coeffs)) < 2 ** 60:
        mat = mat.astype(np.int64)
    a2 = mat @ mat
    a3 = a2 @ mat
    lhs = c3 * a3 + c2 * a2 + c1 * mat
    lhs = lhs + c0 * np.eye(n, dtype=mat.dtype)
    return bool(np.all(lhs == rhs_scalar))
