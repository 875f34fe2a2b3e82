"""Maximal ideals of S over an unramified prime p, and their valuations.

With V = Z_(p) and p not dividing disc(m), the power basis is p-integral
and m mod p is squarefree.  Its irreducible factors g_1..g_r over F_p
correspond to the maximal ideals M_i = (p, g_i(theta)) of S.  Valuations
v_{M_i} are computed from resultants against p-adic lifts of the g_i,
with the lifting precision raised until the result is certified.
"""

from __future__ import annotations

import hashlib
import json
import random
import threading
from fractions import Fraction
from math import gcd, lcm

from . import polynomials as P
from .numberfield import FieldElement, GaloisGroup, NumberField
from .valuegroup import Value, ValueGroup

DEFAULT_PRECISION = 8
GUARD = 4
MAX_PRECISION = 1 << 14

Z1 = ValueGroup.lex(1)


class SplittingError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------- factoring over F_p

def distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a monic squarefree f over F_p into products of equal-degree irreducibles."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while P.degree(f) >= 2 * (d + 1):
        d += 1
        h = P.mpowmod(h, p, f, p)
        g = P.mgcd(f, P.msub(h, [0, 1], p), p)
        if P.degree(g) > 0:
            out.append((g, d))
            f = P.mdivmod(f, g, p)[0]
            h = P.mrem(h, f, p)
    if P.degree(f) > 0:
        out.append((f, P.degree(f)))
    return out


def equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus splitting of f (a product of degree-d irreducibles) over F_p."""
    n = P.degree(f)
    if n == d:
        return [f]
    while True:
        a = P.trim([rng.randrange(p) for _ in range(n)])
        if P.degree(a) < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, b = list(a), list(a)
            for _ in range(d - 1):
                b = P.mrem(P.mmul(b, b, 2), f, 2)
                t = P.madd(t, b, 2)
            g = P.mgcd(f, t, 2)
        else:
            b = P.mpowmod(a, (p ** d - 1) // 2, f, p)
            g = P.mgcd(f, P.msub(b, [1], p), p)
        if 0 < P.degree(g) < n:
            h = P.mdivmod(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(P.mmonic(h, p), d, p, rng)


def _root_order_key(g: list[int], p: int) -> tuple:
    # coefficients of (-1)^deg g(-x): for a linear factor x - a this is (a, 1),
    # so linear factors come out ordered by their root
    d = P.degree(g)
    return (d, tuple(((-1) ** (d - j) * c) % p for j, c in enumerate(g)))


def factor_mod_p(m, p: int, seed: int | None = None) -> list[list[int]]:
    """Monic irreducible factors of m over F_p, in a canonical order."""
    f = P.mreduce(m, p)
    material = json.dumps([p, list(m), seed]).encode()
    rng = random.Random(int.from_bytes(hashlib.sha256(material).digest()[:8], "big"))
    factors = []
    for part, d in distinct_degree(f, p):
        factors.extend(equal_degree(P.mmonic(part, p), d, p, rng))
    return sorted(factors, key=lambda g: _root_order_key(g, p))


# ---------------------------------------------------------------- Hensel lifting

class _Lift:
    """Linear Hensel lifting of one monic factor g of m, with m = g*h mod p^k."""

    def __init__(self, m: list[int], g: list[int], p: int):
        self.m = list(m)
        self.p = p
        self.g = list(g)
        self.h = P.mdivmod(m, g, p)[0]
        one, self.s, self.t = P.mxgcd(self.g, self.h, p)
        if one != [1]:
            raise SplittingError("not_coprime", "factors of m mod p are not coprime")
        self.k = 1

    def lift_to(self, k: int) -> list[int]:
        p = self.p
        while self.k < k:
            pk = p ** self.k
            pk1 = pk * p
            prod = P.mmul(self.g, self.h, pk1) + [0] * len(self.m)
            e = P.trim([((c - prod[i]) % pk1) // pk for i, c in enumerate(self.m)])
            _, r = P.mdivmod(P.mmul(self.t, e, p), self.g, p)
            self.g = P.madd(self.g, [pk * c for c in r], pk1)
            self.h, rem = P.mdivmod(self.m, self.g, pk1)
            if rem:
                raise SplittingError("hensel_failure", "Hensel step did not produce a factor")
            self.k += 1
        return P.mreduce(self.g, p ** k)


class PrimeSplitting:
    """The decomposition of p in S, with adaptive-precision valuations.

    ``factors[i]`` is g_i mod p; ``action[s][i]`` is the index j with
    s(M_i) = M_j.  Concurrent readers are safe: precision escalation is
    serialized by a lock and never changes a computed valuation.
    """

    def __init__(self, galois: GaloisGroup, p: int, *, seed: int | None = None,
                 precision: int = DEFAULT_PRECISION):
        field = galois.field
        if not isinstance(p, int) or not is_prime(p):
            raise SplittingError("not_prime", f"{p!r} is not a prime")
        if field.discriminant % p == 0:
            raise SplittingError(
                "ramified",
                f"p = {p} divides disc(m) = {field.discriminant}: ramified or non-maximal power basis; unsupported input",
            )
        self.galois = galois
        self.field = field
        self.p = p
        self.factors = factor_mod_p(field.min_poly, p, seed)
        degs = {P.degree(g) for g in self.factors}
        if len(degs) != 1:
            raise SplittingError("not_galois", f"factor degrees {sorted(degs)} differ: field is not Galois over Q")
        self.f = degs.pop()
        self.r = len(self.factors)
        if self.f * self.r != field.degree:
            raise SplittingError("fundamental_equality", "f * r != n")
        self._lock = threading.Lock()
        self._lifts = [_Lift(list(field.min_poly), g, p) for g in self.factors]
        self.precision = max(int(precision), GUARD + 1)
        self._lifted = [lf.lift_to(self.precision) for lf in self._lifts]
        self.action = [self.galois_action(s) for s in range(galois.order)]
        self._check_action()

    @property
    def lifted_factors(self) -> list[list[int]]:
        return [list(g) for g in self._lifted]

    def _ensure_precision(self, k: int) -> tuple[int, list[list[int]]]:
        with self._lock:
            if k > self.precision:
                self._lifted = [lf.lift_to(k) for lf in self._lifts]
                self.precision = k
            return self.precision, list(self._lifted)

    def factor_element(self, i: int) -> FieldElement:
        """g_i(theta), the mod-p factor evaluated at the generator; lies in M_i only."""
        return self.field.element(self.factors[i])

    def _scaled(self, a: FieldElement) -> tuple[list[int], int]:
        """Write a = p^shift * A(theta) / u with A integral, content prime to p, u a p-unit."""
        coeffs = [c for c in a.coeffs]
        den = lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        content = 0
        for c in ints:
            content = gcd(content, c)
        k = P.vp(content, self.p)
        ints = [c // self.p ** k for c in ints]
        return P.trim(ints), k - P.vp(den, self.p)

    def valuation_int(self, i: int, a: FieldElement) -> int:
        if not a:
            raise ValueError("valuation of zero is undefined")
        if not 0 <= i < self.r:
            raise IndexError(f"ideal index {i} out of range 0..{self.r - 1}")
        A, shift = self._scaled(a)
        if P.degree(A) == 0:
            return shift
        p = self.p
        k, lifted = self._ensure_precision(self.precision)
        while True:
            g = lifted[i]
            res = P.resultant_int(g, A) % p ** k
            if res:
                v = P.vp(res, p)
                if v < k - GUARD:
                    break
            if 2 * k > MAX_PRECISION:
                raise SplittingError("precision", f"valuation exceeds working precision {k}")
            k, lifted = self._ensure_precision(2 * k)
        if v % self.f:
            raise SplittingError("internal", f"resultant valuation {v} not divisible by residue degree {self.f}")
        return shift + v // self.f

    def valuation(self, i: int, a: FieldElement) -> Value:
        """v_{M_i}(a) as an element of Z (normalized so that v(p) = 1)."""
        return Value((self.valuation_int(i, a),), Z1)

    def is_integral(self, a: FieldElement) -> bool:
        return not a or all(self.valuation_int(i, a) >= 0 for i in range(self.r))

    def galois_action(self, s: int) -> list[int]:
        if self.r == 1:
            # g_1 = m, so g_1(theta) = 0; p is inert
            return [0]
        perm = []
        for i in range(self.r):
            img = self.galois.apply(s, self.factor_element(i))
            hits = [j for j in range(self.r) if self.valuation_int(j, img) > 0]
            if len(hits) != 1:
                raise SplittingError("internal", f"automorphism {s} sends M{i} to {len(hits)} ideals")
            perm.append(hits[0])
        return perm

    def _check_action(self) -> None:
        G = self.galois.group
        for a in G.elements():
            for b in G.elements():
                ab = G.mul(a, b)
                if any(self.action[ab][i] != self.action[a][self.action[b][i]] for i in range(self.r)):
                    raise SplittingError("internal", "Galois action is not a homomorphism")
        if len({self.action[s][0] for s in G.elements()}) != self.r:
            raise SplittingError("internal", "Galois action is not transitive")

    def to_json(self) -> dict:
        return {
            "prime": self.p,
            "residue_degree": self.f,
            "factors": [list(g) for g in self.factors],
            "action": [list(a) for a in self.action],
        }


def split(galois: GaloisGroup, p: int, **kwargs) -> PrimeSplitting:
    return PrimeSplitting(galois, p, **kwargs)


def vp_norm(field: NumberField, a: FieldElement, p: int) -> int:
    """v_p(N_{K/Q}(a)), via the multiplication-matrix determinant."""
    return P.vp(Fraction(field.norm(a)), p)


def random_integral(splitting: PrimeSplitting, rng: random.Random, bound: int = 6) -> FieldElement:
    """A nonzero element of Z[theta], often multiplied by p or by some g_i(theta).

    The extra factors push values at chosen ideals above zero, so that
    samples land on both sides of threshold tests.
    """
    field = splitting.field
    while True:
        a = field.element([rng.randint(-bound, bound) for _ in range(field.degree)])
        if a:
            break
    roll = rng.random()
    if roll < 0.25:
        a = a * splitting.p
    elif roll < 0.6 and splitting.r > 1:
        for _ in range(rng.randint(1, 2)):
            a = a * splitting.factor_element(rng.randrange(splitting.r))
    return a
