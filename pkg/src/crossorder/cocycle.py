"""Field-valued normalized 2-cocycles f: G x G -> S^#."""

from __future__ import annotations

from itertools import product
from typing import Mapping, Sequence

from .errors import Contradiction, InputError, Violation
from .groups import FiniteGroup
from .numberfield import FieldElement, GaloisGroup
from .profile import ValuationTable
from .valuegroup import ValueGroup


class Cocycle:
    """An n x n table of field elements indexed by (s, t) in the Galois group."""

    def __init__(self, galois: GaloisGroup, values: Sequence[Sequence[FieldElement]]):
        n = galois.order
        if len(values) != n or any(len(row) != n for row in values):
            raise InputError(Violation("cocycle_shape", f"cocycle must be an {n} x {n} table"))
        self.galois = galois
        self.field = galois.field
        self.values = tuple(tuple(row) for row in values)

    @classmethod
    def from_json(cls, galois: GaloisGroup, raw) -> "Cocycle":
        try:
            return cls(galois, [[galois.field.element(c) for c in row] for row in raw])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(Violation("schema", f"bad cocycle entry: {exc}")) from exc

    @classmethod
    def trivial(cls, galois: GaloisGroup) -> "Cocycle":
        one = galois.field.one()
        return cls(galois, [[one] * galois.order for _ in range(galois.order)])

    @property
    def group(self) -> FiniteGroup:
        return self.galois.group

    def __call__(self, s: int, t: int) -> FieldElement:
        return self.values[s][t]

    def __eq__(self, other):
        return isinstance(other, Cocycle) and self.values == other.values

    def to_json(self) -> list:
        return [[v.to_json() for v in row] for row in self.values]

    def structural_violations(self) -> list[Violation]:
        """Zero values, normalization and the cocycle identity, by exact arithmetic."""
        G, n = self.group, self.group.order
        out = []
        for s, t in product(range(n), repeat=2):
            if not self.values[s][t]:
                out.append(Violation("zero_value", f"f({s},{t}) = 0", (s, t)))
        if out:
            return out
        e = G.identity
        for s in range(n):
            if self.values[e][s] != 1 or self.values[s][e] != 1:
                out.append(Violation("normalization", f"f({e},{s}) or f({s},{e}) is not 1", (s,)))
        for s, t, u in product(range(n), repeat=3):
            lhs = self.galois.apply(s, self.values[t][u]) * self.values[s][G.mul(t, u)]
            rhs = self.values[s][t] * self.values[G.mul(s, t)][u]
            if lhs != rhs:
                out.append(Violation("cocycle_identity", f"s(f(t,u)) f(s,tu) = {lhs!r} != {rhs!r}", (s, t, u)))
        return out

    def integrality_violations(self, splitting) -> list[Violation]:
        out = []
        n = self.group.order
        for M, s, t in product(range(splitting.r), range(n), range(n)):
            v = splitting.valuation_int(M, self.values[s][t])
            if v < 0:
                out.append(Violation("non_integral", f"v_M{M}(f({s},{t})) = {v} < 0", (M, s, t)))
        return out


def valuation_table(c: Cocycle, splitting) -> ValuationTable:
    n = c.group.order
    w = tuple(
        tuple(tuple(splitting.valuation(M, c.values[s][t]) for t in range(n)) for s in range(n))
        for M in range(splitting.r)
    )
    return ValuationTable(w, ValueGroup.lex(1))


def verify(c: Cocycle, splitting) -> ValuationTable:
    """Check every cocycle invariant against the prime; return the valuation table."""
    if splitting.galois is not c.galois and splitting.field != c.field:
        raise InputError(Violation("field_mismatch", "cocycle and splitting use different fields"))
    bad = c.structural_violations()
    if not bad:
        bad = c.integrality_violations(splitting)
    if bad:
        raise InputError(bad)
    return valuation_table(c, splitting)


def twist(c: Cocycle, coeffs: Mapping[int, FieldElement], splitting=None) -> Cocycle:
    """The cohomologous cocycle g(s,t) = c_s s(c_t) c_st^-1 f(s,t).

    Missing coefficients default to 1; c at the identity must be 1.  With a
    splitting, g is also checked to stay inside S.
    """
    G = c.group
    n = G.order
    one = c.field.one()
    cs = [coeffs.get(s, one) for s in range(n)]
    for s, x in enumerate(cs):
        if not x:
            raise InputError(Violation("zero_coefficient", f"twist coefficient c_{s} is zero", (s,)))
    if cs[G.identity] != one:
        raise InputError(Violation("twist_identity", "twist coefficient at the identity must be 1", (G.identity,)))
    values = [
        [cs[s] * c.galois.apply(s, cs[t]) * cs[G.mul(s, t)].inverse() * c.values[s][t] for t in range(n)]
        for s in range(n)
    ]
    g = Cocycle(c.galois, values)
    bad = g.structural_violations()
    if bad:
        raise Contradiction("twist", "twisted table fails the cocycle identity", bad[0].witness)
    if splitting is not None:
        leaks = g.integrality_violations(splitting)
        if leaks:
            raise InputError([Violation("leaves_S", "cohomologous cocycle leaves S: " + v.message, v.witness)
                              for v in leaks])
    return g


def subgroup_H(table: ValuationTable, group: FiniteGroup) -> list[int]:
    """H = {s : f(s, s^-1) is a unit of S}, read off the valuation table."""
    H = [s for s in group.elements()
         if all(table.w[M][s][group.inv(s)].is_zero() for M in range(table.r))]
    if not group.is_subgroup(H):
        raise Contradiction("subgroup_H", f"H = {H} is not a subgroup", tuple(H))
    return H
