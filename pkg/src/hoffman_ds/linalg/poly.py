"""Dense univariate polynomials over Z and Q.

Polynomials are plain lists of coefficients in descending degree order,
``[c_d, ..., c_1, c_0]``; the zero polynomial is ``[]``.  Coefficients are
``int`` or ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import List, Sequence, Tuple, Union

Number = Union[int, Fraction]
Poly = List[Number]


def trim(p: Sequence[Number]) -> Poly:
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return list(p[i:])


def degree(p: Sequence[Number]) -> int:
    return len(trim(p)) - 1


def evaluate(p: Sequence[Number], x: Number) -> Number:
    acc: Number = 0
    for c in p:
        acc = acc * x + c
    return acc


def sign_at(p: Sequence[int], x: Fraction) -> int:
    """Sign of an integer polynomial at a rational point, without fractions."""
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    # homogenised Horner: den^d * p(num/den)
    for c in p:
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def mul(p: Sequence[Number], q: Sequence[Number]) -> Poly:
    if not p or not q:
        return []
    out: Poly = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def add(p: Sequence[Number], q: Sequence[Number]) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    off = len(p) - len(q)
    for i, c in enumerate(q):
        out[off + i] += c
    return trim(out)


def scale(p: Sequence[Number], c: Number) -> Poly:
    return trim([a * c for a in p])


def from_roots(roots: Sequence[Tuple[Number, int]]) -> Poly:
    """Monic polynomial with the given (root, multiplicity) pairs."""
    out: Poly = [1]
    for r, m in roots:
        for _ in range(m):
            out = mul(out, [1, -r])
    return out


def divide_linear(p: Sequence[Number], r: Number) -> Tuple[Poly, Number]:
    """Synthetic division by ``x - r``; returns (quotient, remainder)."""
    if not p:
        return [], 0
    out: Poly = []
    acc: Number = 0
    for c in p:
        acc = acc * r + c
        out.append(acc)
    rem = out.pop()
    return out, rem


def divmod_poly(p: Sequence[Number], q: Sequence[Number]) -> Tuple[Poly, Poly]:
    """Long division over Q.  Quotient/remainder coefficients are exact."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem: Poly = [Fraction(c) for c in trim(p)]
    dq = len(q) - 1
    lead = Fraction(q[0])
    if len(rem) - 1 < dq:
        return [], trim(rem)
    quot: Poly = []
    while len(rem) - 1 >= dq:
        f = rem[0] / lead
        quot.append(f)
        for i in range(len(q)):
            rem[i] -= f * q[i]
        rem.pop(0)
    return [_demote(c) for c in quot], [_demote(c) for c in trim(rem)]


def divides(q: Sequence[Number], p: Sequence[Number]) -> bool:
    """True iff ``q`` divides ``p`` over Q."""
    return not divmod_poly(p, q)[1]


def derivative(p: Sequence[Number]) -> Poly:
    d = len(p) - 1
    return trim([c * (d - i) for i, c in enumerate(p[:-1])])


def monic(p: Sequence[Number]) -> Poly:
    p = trim(p)
    if not p:
        return []
    lead = Fraction(p[0])
    return [_demote(Fraction(c) / lead) for c in p]


def gcd_poly(p: Sequence[Number], q: Sequence[Number]) -> Poly:
    """Monic gcd over Q (Euclid on primitive parts to limit growth)."""
    a, b = primitive(p), primitive(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, primitive(r)
    return monic(a)


def primitive(p: Sequence[Number]) -> List[int]:
    """Integer polynomial with coprime coefficients and positive lead."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[0] < 0:
        ints = [-c for c in ints]
    return ints


def squarefree_decomposition(p: Sequence[Number]) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: monic squarefree factors ``[(f_i, i)]`` with p = lead * prod f_i^i."""
    f = monic(p)
    if len(f) <= 1:
        return []
    out: List[Tuple[Poly, int]] = []
    fp = derivative(f)
    a = gcd_poly(f, fp)
    b = divmod_poly(f, a)[0]
    c = divmod_poly(fp, a)[0]
    d = add(c, scale(derivative(b), -1))
    i = 1
    while len(b) > 1:
        g = gcd_poly(b, d)
        if len(g) > 1:
            out.append((g, i))
        b = divmod_poly(b, g)[0]
        c = divmod_poly(d, g)[0]
        d = add(c, scale(derivative(b), -1))
        i += 1
    return out


def real_root_bound(p: Sequence[Number]) -> int:
    """Integer B with every root in [-B, B], valid when ``p`` is real-rooted.

    Uses sum of squared roots = e1^2 - 2 e2 (Newton), so max |root| <= sqrt of it.
    """
    p = monic(p)
    d = len(p) - 1
    if d <= 0:
        return 0
    e1 = -Fraction(p[1])
    e2 = Fraction(p[2]) if d >= 2 else Fraction(0)
    s2 = e1 * e1 - 2 * e2
    if s2 < 0:
        raise ValueError("polynomial is not real-rooted")
    return isqrt(int(s2) + 1) + 1


def to_strings(p: Sequence[Number]) -> List[str]:
    return [str(c) for c in p]


def from_strings(items: Sequence[str]) -> Poly:
    return [_demote(Fraction(s)) for s in items]


def format_poly(p: Sequence[Number], var: str = "x") -> str:
    p = trim(p)
    if not p:
        return "0"
    d = len(p) - 1
    parts = []
    for i, c in enumerate(p):
        e = d - i
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if e == 0:
            body = str(a)
        else:
            coef = "" if a == 1 else f"{a}*"
            body = coef + (var if e == 1 else f"{var}^{e}")
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _demote(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c
