"""Exact arithmetic in K = Q[x]/(m(x)) with a verified table of automorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import polynomials as P
from .groups import FiniteGroup


class GaloisDataError(ValueError):
    def __init__(self, code: str, message: str, witness=None):
        super().__init__(message)
        self.code = code
        self.witness = witness


def _parse_rational(c) -> Fraction:
    if isinstance(c, bool):
        raise ValueError(f"not a rational: {c!r}")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise ValueError(f"not a rational: {c!r}")


class NumberField:
    """K = Q[x]/(m) for a monic squarefree integer polynomial m.

    Irreducibility of m is assumed, not proven; supplying n distinct
    automorphisms (see ``verify_galois``) is the accepted evidence.
    """

    def __init__(self, min_poly: Sequence[int]):
        m = list(min_poly)
        if not m or not all(isinstance(c, int) and not isinstance(c, bool) for c in m):
            raise ValueError("min_poly must be a nonempty list of integers")
        P.trim(m)
        if len(m) < 2 or m[-1] != 1:
            raise ValueError(f"min_poly must be monic of degree >= 1, got {min_poly!r}")
        self.min_poly = tuple(m)
        self.degree = len(m) - 1
        self._m = P.qpoly(m)
        n = self.degree
        res = P.resultant_int(m, [i * m[i] for i in range(1, len(m))]) if n > 1 else 1
        self.discriminant = (-1) ** (n * (n - 1) // 2) * res
        if self.discriminant == 0:
            raise ValueError("min_poly is not squarefree (zero discriminant)")

    def __repr__(self):
        return f"NumberField({list(self.min_poly)})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.min_poly == self.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def element(self, coeffs) -> "FieldElement":
        """Element from a little-endian coefficient list (ints, Fractions or "p/q" strings)."""
        return FieldElement(self, P.qrem([_parse_rational(c) for c in coeffs], self._m))

    def __call__(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, (int, Fraction, str)):
            coeffs = [coeffs]
        return self.element(coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement(self, [])

    def one(self) -> "FieldElement":
        return FieldElement(self, [Fraction(1)])

    def gen(self) -> "FieldElement":
        return self.element([0, 1])

    def power_basis(self) -> list["FieldElement"]:
        return [self.element([0] * j + [1]) for j in range(self.degree)]

    def mult_matrix(self, a: "FieldElement") -> list[list[Fraction]]:
        """Matrix of multiplication by a on the power basis (column j = a*theta^j)."""
        cols = [(a * b).coeffs for b in self.power_basis()]
        return [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def norm(self, a: "FieldElement") -> Fraction:
        """N_{K/Q}(a) as the determinant of the multiplication matrix."""
        return P.det_fraction(self.mult_matrix(a))


class FieldElement:
    __slots__ = ("field", "_c")

    def __init__(self, field: NumberField, coeffs: list):
        self.field = field
        self._c = tuple(coeffs)

    @property
    def coeffs(self) -> list[Fraction]:
        """Dense coefficient list of length n."""
        n = self.field.degree
        return list(self._c) + [Fraction(0)] * (n - len(self._c))

    def _same(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("elements of different fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, P.qadd(list(self._c), list(other._c)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-c for c in self._c])

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, P.qsub(list(self._c), list(other._c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, P.qrem(P.qmul(list(self._c), list(other._c)), self.field._m))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self._c:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = P.qxgcd(list(self._c), self.field._m)
        if g != [1]:
            raise ZeroDivisionError("element is a zero divisor; min_poly is not irreducible")
        return FieldElement(self.field, P.qrem(s, self.field._m))

    def __truediv__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_rational(self) -> bool:
        return len(self._c) <= 1

    def to_json(self) -> list:
        out = []
        for c in self._c:
            out.append(c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
        return out

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for j, c in enumerate(self._c):
            if c:
                terms.append(str(c) if j == 0 else f"{c}*x" if j == 1 else f"{c}*x^{j}")
        return " + ".join(terms)


@dataclass(frozen=True)
class Automorphism:
    """theta -> image(theta); ``index`` is the position in the verified group table."""

    image: FieldElement
    index: int

    def __call__(self, a: FieldElement) -> FieldElement:
        return apply(self, a)


def apply(sigma: Automorphism, a: FieldElement) -> FieldElement:
    f = a.field
    return FieldElement(f, P.qcompose_mod(list(a._c), list(sigma.image._c), f._m))


class GaloisGroup:
    """A number field together with a verified list of its n automorphisms."""

    def __init__(self, field: NumberField, autos: list[Automorphism], group: FiniteGroup):
        self.field = field
        self.autos = autos
        self.group = group

    @property
    def order(self) -> int:
        return self.group.order

    def __getitem__(self, i: int) -> Automorphism:
        return self.autos[i]

    def apply(self, i: int, a: FieldElement) -> FieldElement:
        return apply(self.autos[i], a)


def verify_galois(field: NumberField, images) -> GaloisGroup:
    """Check that the given root images form the full automorphism group of K.

    ``images`` are FieldElements or coefficient lists.  The composition
    table uses (st)(a) = s(t(a)).
    """
    n = field.degree
    elems = [im if isinstance(im, FieldElement) else field.element(im) for im in images]
    if len(elems) != n:
        raise GaloisDataError("galois_count", f"expected {n} automorphisms, got {len(elems)}")
    m = list(field._m)
    for i, a in enumerate(elems):
        if P.qcompose_mod(m, list(a._c), field._m):
            raise GaloisDataError("galois_not_root", f"automorphism {i}: image {a!r} is not a root of min_poly", (i,))
    for i in range(n):
        for j in range(i):
            if elems[i] == elems[j]:
                raise GaloisDataError("galois_duplicate", f"automorphisms {j} and {i} coincide", (j, i))
    autos = [Automorphism(a, i) for i, a in enumerate(elems)]
    lookup = {a: i for i, a in enumerate(elems)}
    table = []
    for s in autos:
        row = []
        for t in autos:
            comp = apply(s, t.image)
            if comp not in lookup:
                raise GaloisDataError("galois_not_closed", f"composite of {s.index} and {t.index} is not in the list", (s.index, t.index))
            row.append(lookup[comp])
        table.append(row)
    try:
        group = FiniteGroup.from_table(table)
    except ValueError as exc:
        raise GaloisDataError("galois_not_group", f"composition table is not a group: {exc}") from exc
    if elems[group.identity] != field.gen():
        raise GaloisDataError("galois_identity", "identity of the table is not x -> x")
    return GaloisGroup(field, autos, group)
