"""Dense univariate polynomial helpers.

Polynomials are lists of coefficients, constant term first.  The zero
polynomial is the empty list; every other polynomial has a nonzero last
entry.  Functions with a ``q`` prefix work over Q (``Fraction``), functions
with a ``m`` prefix work over Z/NZ for a modulus N given as argument.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence) -> int:
    return len(a) - 1


# ---------------------------------------------------------------- over Q

def qpoly(coeffs) -> list[Fraction]:
    return trim([Fraction(c) for c in coeffs])


def qadd(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def qsub(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def qscale(a, c):
    return trim([c * x for x in a])


def qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def qdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r.pop()
        trim(r)
    return trim(q), trim(r)


def qrem(a, b):
    return qdivmod(a, b)[1]


def qxgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g and g monic (or zero)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, qsub(s0, qmul(q, s1))
        t0, t1 = t1, qsub(t0, qmul(q, t1))
    if r0:
        inv = 1 / r0[-1]
        r0, s0, t0 = qscale(r0, inv), qscale(s0, inv), qscale(t0, inv)
    return r0, s0, t0


def qcompose_mod(a, b, m):
    """a(b(x)) reduced mod m, by Horner's rule."""
    out: list = []
    for c in reversed(a):
        out = qrem(qadd(qmul(out, b), [c] if c else []), m)
    return out


def qderiv(a):
    return trim([i * a[i] for i in range(1, len(a))])


# ---------------------------------------------------------------- over Z/NZ

def mreduce(a, N: int) -> list[int]:
    return trim([int(x) % N for x in a])


def madd(a, b, N):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % N for i in range(n)])


def msub(a, b, N):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % N for i in range(n)])


def mscale(a, c, N):
    return trim([(c * x) % N for x in a])


def mmul(a, b, N):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % N for c in out])


def mdivmod(a, b, N):
    """Division with remainder; the leading coefficient of b must be a unit mod N."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, N)
    r = [x % N for x in a]
    trim(r)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = (r[-1] * inv) % N
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % N
        r.pop()
        trim(r)
    return trim(q), trim(r)


def mrem(a, b, N):
    return mdivmod(a, b, N)[1]


def mmonic(a, N):
    return mscale(a, pow(a[-1], -1, N), N)


def mgcd(a, b, p):
    """Monic gcd over the field F_p."""
    a, b = mreduce(a, p), mreduce(b, p)
    while b:
        a, b = b, mrem(a, b, p)
    return mmonic(a, p) if a else a


def mxgcd(a, b, p):
    """Return (g, s, t) over F_p with s*a + t*b = g, g monic."""
    r0, r1 = mreduce(a, p), mreduce(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = mdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, msub(s0, mmul(q, s1, p), p)
        t0, t1 = t1, msub(t0, mmul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return mscale(r0, inv, p), mscale(s0, inv, p), mscale(t0, inv, p)


def mpowmod(a, e: int, m, N):
    result = [1 % N]
    base = mrem(a, m, N)
    while e:
        if e & 1:
            result = mrem(mmul(result, base, N), m, N)
        e >>= 1
        if e:
            base = mrem(mmul(base, base, N), m, N)
    return trim(result)


# ---------------------------------------------------------------- determinants

def det_int(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss fraction-free elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_fraction(rows) -> Fraction:
    """Exact determinant over Q by Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                c = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= c * a[k][j]
    return det


def sylvester(a: Sequence[int], b: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of two nonconstant-or-constant polynomials (not both zero-degree)."""
    m, n = degree(a), degree(b)
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant_int(a: Sequence[int], b: Sequence[int]) -> int:
    """Resultant of two nonzero integer polynomials via the Sylvester determinant."""
    if not a or not b:
        return 0
    if degree(a) == 0:
        return a[0] ** degree(b)
    if degree(b) == 0:
        return b[0] ** degree(a)
    return det_int(sylvester(a, b))


def vp(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or Fraction."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    if isinstance(n, Fraction):
        return vp(n.numerator, p) - vp(n.denominator, p)
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k
