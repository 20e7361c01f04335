"""Multimodular characteristic polynomial for integer matrices.

The polynomial is computed modulo a set of word-sized primes by Hessenberg
reduction (numpy, vectorised per column) and lifted by Chinese remaindering.
The number of primes comes from a Hadamard-type bound on the coefficients, so
the result is exact, not probabilistic.
"""
from __future__ import annotations

from math import comb, isqrt
from typing import Iterator, List, Sequence

import numpy as np


def coefficient_bound(rows: Sequence[Sequence[int]]) -> int:
    """Upper bound on |c_k| for every coefficient of det(xI - A).

    c_{n-k} is a signed sum of the C(n,k) principal k-minors, and each minor is
    at most the product of its k row norms (Hadamard).
    """
    n = len(rows)
    sq = sorted((sum(v * v for v in r) for r in rows), reverse=True)
    best = 1
    prod = 1
    for k in range(1, n + 1):
        prod *= sq[k - 1]
        if prod == 0:
            break
        best = max(best, comb(n, k) * (isqrt(prod) + 1))
    return best


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def primes_below(limit: int) -> Iterator[int]:
    m = limit - 1
    while m > 2:
        if _is_prime(m):
            yield m
        m -= 1


def prime_bits(n: int) -> int:
    """Largest prime size keeping n * p^2 inside int64."""
    return min(30, (62 - max(n, 2).bit_length()) // 2)


def charpoly_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (ascending) of det(xI - A) mod p, via Hessenberg form."""
    n = a.shape[0]
    h = np.array(a, dtype=np.int64) % p
    for j in range(n - 2):
        col = h[j + 1:, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        inv = pow(int(h[j + 1, j]), -1, p)
        u = h[j + 2:, j] * inv % p
        if not u.any():
            continue
        # rows r > j+1: R_r -= u_r R_{j+1}; then the inverse column operation
        h[j + 2:, j:] = (h[j + 2:, j:] - np.outer(u, h[j + 1, j:]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2:] @ u) % p

    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    prods = np.zeros(0, dtype=np.int64)
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - h[m - 1, m - 1] * prev % p) % p
        if m >= 2:
            sub = h[m - 1, m - 2]
            prods = np.append(prods * sub % p, sub)
            c = h[: m - 1, m - 1] * prods % p
            s = (c @ polys[: m - 1]) % p
            cur = (cur - s) % p
        polys[m] = cur
    return polys[n]


def charpoly_multimodular(rows: Sequence[Sequence[int]]) -> List[int]:
    """Exact det(xI - A) (descending coefficients) for an integer matrix."""
    n = len(rows)
    if n == 0:
        return [1]
    bound = coefficient_bound(rows)
    a = np.array(rows, dtype=object)
    bits = prime_bits(n)
    residues: List[np.ndarray] = []
    moduli: List[int] = []
    modulus = 1
    for p in primes_below(1 << bits):
        am = np.array([[int(v) % p for v in r] for r in a], dtype=np.int64)
        residues.append(charpoly_mod_p(am, p))
        moduli.append(p)
        modulus *= p
        if modulus > 2 * bound:
            break
    coeffs = []
    for k in range(n + 1):
        x = int(residues[0][k])
        m = moduli[0]
        for res, p in zip(residues[1:], moduli[1:]):
            r = int(res[k])
            t = ((r - x) % p) * pow(m % p, -1, p) % p
            x += m * t
            m *= p
        if x > m // 2:
            x -= m
        coeffs.append(x)
    return coeffs[::-1]
