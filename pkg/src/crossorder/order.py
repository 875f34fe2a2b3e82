"""The crossed-product order A_f = sum_s S x_s.

Elements multiply by  (a x_s)(b x_t) = a s(b) f(s,t) x_{st}.  Besides
element arithmetic this module describes J(A_f) = sum_s I_s x_s through
valuation bounds, and builds the residue algebra A_f / pA_f over F_p that
serves as an independent Azumaya test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional

from . import polynomials as P
from .cocycle import Cocycle
from .fpalgebra import FpAlgebra
from .numberfield import FieldElement
from .profile import ValuationProfile, ValuationTable
from .valuegroup import Value


class OrderElement:
    """sum_s coeffs[s] x_s, with zero coefficients dropped."""

    __slots__ = ("cocycle", "coeffs")

    def __init__(self, cocycle: Cocycle, coeffs: Mapping[int, FieldElement]):
        self.cocycle = cocycle
        self.coeffs = {s: a for s, a in sorted(coeffs.items()) if a}

    @classmethod
    def basis(cls, cocycle: Cocycle, s: int, a: Optional[FieldElement] = None) -> "OrderElement":
        return cls(cocycle, {s: a if a is not None else cocycle.field.one()})

    def __add__(self, other: "OrderElement") -> "OrderElement":
        out = dict(self.coeffs)
        for s, b in other.coeffs.items():
            out[s] = out[s] + b if s in out else b
        return OrderElement(self.cocycle, out)

    def __mul__(self, other: "OrderElement") -> "OrderElement":
        return multiply(self, other, self.cocycle)

    def __eq__(self, other):
        return isinstance(other, OrderElement) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({a!r})x_{s}" for s, a in self.coeffs.items())


def multiply(a: OrderElement, b: OrderElement, c: Cocycle) -> OrderElement:
    G = c.group
    out: dict[int, FieldElement] = {}
    for s, x in a.coeffs.items():
        for t, y in b.coeffs.items():
            st = G.mul(s, t)
            term = x * c.galois.apply(s, y) * c.values[s][t]
            out[st] = out[st] + term if st in out else term
    return OrderElement(c, out)


def basis_associativity_failures(c: Cocycle) -> list[tuple[int, int, int]]:
    """Triples (s,t,u) where (x_s x_t) x_u != x_s (x_t x_u)."""
    n = c.group.order
    x = [OrderElement.basis(c, s) for s in range(n)]
    return [(s, t, u) for s, t, u in product(range(n), repeat=3)
            if (x[s] * x[t]) * x[u] != x[s] * (x[t] * x[u])]


# ---------------------------------------------------------------- J(A_f)

@dataclass(frozen=True)
class IdealDescription:
    """sum_s I_s x_s, where x is in I_s iff v_M(x) >= bounds[s][M] for every M."""

    bounds: tuple[tuple[Value, ...], ...]

    def contains(self, s: int, values_at_ideals) -> bool:
        return all(v >= b for v, b in zip(values_at_ideals, self.bounds[s]))

    def to_json(self) -> list:
        return [[b.to_json() for b in row] for row in self.bounds]


def jacobson_radical(table: ValuationTable, profile: ValuationProfile) -> IdealDescription:
    """I_s = intersection of the M with f(s, s^-1) not in M; S when there are none."""
    gamma = profile.gamma
    if not gamma.is_discrete():
        raise ValueError("radical bounds need a discrete value group")
    G = profile.group
    zero, one = gamma.zero(), gamma.min_positive()
    bounds = []
    for s in G.elements():
        si = G.inv(s)
        bounds.append(tuple(one if table.w[M][s][si].is_zero() else zero for M in range(profile.r)))
    return IdealDescription(tuple(bounds))


def verify_radical_is_ideal(J: IdealDescription, table: ValuationTable,
                            profile: ValuationProfile) -> tuple[bool, Optional[tuple]]:
    """Two-sided ideal test at the level of valuations, plus s^-1(I_s) = I_{s^-1}.

    Returns (ok, witness); a witness (kind, t, s, M) names the first failure.
    """
    G, r = profile.group, profile.r
    b = J.bounds
    for t, s in product(G.elements(), repeat=2):
        ts, st = G.mul(t, s), G.mul(s, t)
        tinv = G.inv(t)
        for M in range(r):
            # x_t (y x_s) = t(y) f(t,s) x_ts, and v_M(t(y)) = v_{t^-1 M}(y)
            if b[s][profile.act(tinv, M)] + table.w[M][t][s] < b[ts][M]:
                return False, ("left", t, s, M)
            # (y x_s) x_t = y f(s,t) x_st
            if b[s][M] + table.w[M][s][t] < b[st][M]:
                return False, ("right", t, s, M)
    for s in G.elements():
        si = G.inv(s)
        for M in range(r):
            if b[s][profile.act(s, M)] != b[si][M]:
                return False, ("symmetry", si, s, M)
    return True, None


def in_jvs_times(x: FieldElement, f: FieldElement, splitting) -> bool:
    """Whether x*f lies in J(V)S = pS, i.e. has value >= 1 at every M."""
    y = x * f
    return not y or all(splitting.valuation_int(M, y) >= 1 for M in range(splitting.r))


# ---------------------------------------------------------------- residue algebras

def _mod_p(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise ValueError(f"coefficient {c} is not p-integral")
    return c.numerator * pow(c.denominator, -1, p) % p


def residue_algebra(c: Cocycle, splitting) -> FpAlgebra:
    """A_f / pA_f with basis theta^j x_s, indexed s*n + j."""
    p, n, G = splitting.p, c.field.degree, c.group
    powers = c.field.power_basis()
    N = n * G.order
    consts = [[None] * N for _ in range(N)]
    for s, a, t, b in product(G.elements(), range(n), G.elements(), range(n)):
        prod = powers[a] * c.galois.apply(s, powers[b]) * c.values[s][t]
        vec = [0] * N
        st = G.mul(s, t)
        for j, x in enumerate(prod.coeffs):
            vec[st * n + j] = _mod_p(x, p)
        consts[s * n + a][t * n + b] = vec
    one = [0] * N
    one[G.identity * n] = 1
    return FpAlgebra(p, consts, one)


def local_residue_algebra(c: Cocycle, splitting, profile: ValuationProfile, M: int) -> FpAlgebra:
    """A_{f_M} modulo J(U): the crossed product of S/M by D_M, over F_p.

    Basis theta^j x_d for j < f and d in D_M, indexed (position of d)*f + j.
    """
    p, f = splitting.p, splitting.f
    D = profile.decomposition_group(M)
    pos = {d: i for i, d in enumerate(D)}
    gM = splitting.factors[M]
    powers = c.field.power_basis()[:f]
    G = c.group
    N = f * len(D)
    consts = [[None] * N for _ in range(N)]
    for d, a, e, b in product(D, range(f), D, range(f)):
        prod = powers[a] * c.galois.apply(d, powers[b]) * c.values[d][e]
        red = P.mrem([_mod_p(x, p) for x in prod.coeffs], gM, p)
        vec = [0] * N
        base = pos[G.mul(d, e)] * f
        for j, x in enumerate(red):
            vec[base + j] = x
        consts[pos[d] * f + a][pos[e] * f + b] = vec
    one = [0] * N
    one[pos[G.identity] * f] = 1
    return FpAlgebra(p, consts, one)


@dataclass(frozen=True)
class ResidueSummary:
    dim: int
    radical_dim: int
    center_dim: int

    @property
    def central_simple(self) -> bool:
        return self.radical_dim == 0 and self.center_dim == 1

    @property
    def semisimple_dim(self) -> int:
        return self.dim - self.radical_dim

    def to_json(self) -> dict:
        return {"dim": self.dim, "radical_dim": self.radical_dim, "center_dim": self.center_dim,
                "central_simple": self.central_simple}


def summarize(alg: FpAlgebra) -> ResidueSummary:
    return ResidueSummary(alg.dim, len(alg.radical()), len(alg.center()))


def azumaya_oracle(alg: FpAlgebra) -> bool:
    """Central simplicity of the residue algebra over F_p.

    Semisimple with one-dimensional center already forces simplicity: the
    only central idempotents of F_p are 0 and 1.
    """
    return alg.is_central_simple()
