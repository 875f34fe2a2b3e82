"""Valuation profiles: the data classify needs, in concrete or abstract mode.

A profile records the group G, the maximal ideals M_0..M_{r-1} of S, the
action of G on them and the value group.  The cocycle enters only through
its valuation table ``w[M][s][t] = v_M(f(s, t))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .errors import InputError, Violation
from .groups import FiniteGroup, GroupTableError, check_action
from .valuegroup import Value, ValueGroup, coarsen

CONCRETE = "concrete"
ABSTRACT = "abstract"


@dataclass(frozen=True)
class ValuationProfile:
    group: FiniteGroup
    r: int
    action: tuple[tuple[int, ...], ...]
    gamma: ValueGroup
    mode: str = ABSTRACT
    splitting: Optional[object] = field(default=None, compare=False, repr=False)
    # labels map local indices back to the data the profile was derived from
    element_labels: tuple[int, ...] = ()
    ideal_labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.element_labels:
            object.__setattr__(self, "element_labels", tuple(self.group.elements()))
        if not self.ideal_labels:
            object.__setattr__(self, "ideal_labels", tuple(range(self.r)))

    @property
    def n(self) -> int:
        return self.group.order

    def act(self, s: int, M: int) -> int:
        """Index of s(M)."""
        return self.action[s][M]

    def decomposition_group(self, M: int) -> list[int]:
        return decomposition_group(self, M)

    def val(self, M: int, a) -> Value:
        """v_M of a field element; concrete mode only."""
        if self.splitting is None:
            raise ValueError("abstract profiles carry no element-level valuation")
        return self.splitting.valuation(M, a)


@dataclass(frozen=True)
class ValuationTable:
    """``w[M][s][t]``: the value of f(s, t) at M_M."""

    w: tuple[tuple[tuple[Value, ...], ...], ...]
    gamma: ValueGroup

    def __getitem__(self, M):
        return self.w[M]

    @property
    def r(self) -> int:
        return len(self.w)

    def to_json(self) -> list:
        return [[[v.to_json() for v in row] for row in block] for block in self.w]

    def map(self, fn, gamma: ValueGroup) -> "ValuationTable":
        return ValuationTable(tuple(tuple(tuple(fn(v) for v in row) for row in block) for block in self.w), gamma)


def concrete_profile(splitting) -> ValuationProfile:
    g = splitting.galois.group
    return ValuationProfile(
        group=g,
        r=splitting.r,
        action=tuple(tuple(a) for a in splitting.action),
        gamma=ValueGroup.lex(1),
        mode=CONCRETE,
        splitting=splitting,
    )


def decomposition_group(profile: ValuationProfile, M: int) -> list[int]:
    D = [s for s in profile.group.elements() if profile.action[s][M] == M]
    if not profile.group.is_subgroup(D) or len(D) * profile.r != profile.n:
        raise AssertionError(f"stabilizer of M{M} is not a subgroup of order n/r")
    return D


def table_violations(profile: ValuationProfile, table: ValuationTable) -> list[Violation]:
    """Every violated table invariant: shape, group, sign, normalization, cocycle law."""
    G, r, n = profile.group, profile.r, profile.n
    out: list[Violation] = []
    if len(table.w) != r or any(len(b) != n or any(len(row) != n for row in b) for b in table.w):
        return [Violation("table_shape", f"cocycle_valuations must be {r} x {n} x {n}")]
    for M, s, t in product(range(r), range(n), range(n)):
        v = table.w[M][s][t]
        if not isinstance(v, Value) or v.group != profile.gamma:
            out.append(Violation("table_group", f"entry is not a value of {profile.gamma}", (M, s, t)))
    if out:
        return out
    zero = profile.gamma.zero()
    e = G.identity
    for M, s, t in product(range(r), range(n), range(n)):
        if table.w[M][s][t] < zero:
            out.append(Violation("negative_value", f"w[{M}][{s}][{t}] = {table.w[M][s][t]} < 0: f leaves S", (M, s, t)))
    for M, s in product(range(r), range(n)):
        if table.w[M][e][s] != zero or table.w[M][s][e] != zero:
            out.append(Violation("normalization", f"cell (M={M}, s={s}): w[{M}][{e}][{s}] or w[{M}][{s}][{e}] is nonzero",
                                 (M, s)))
    for M, s, t, u in product(range(r), range(n), range(n), range(n)):
        st, tu = G.mul(s, t), G.mul(t, u)
        Minv = profile.action[G.inv(s)][M]
        lhs = table.w[M][s][t] + table.w[M][st][u]
        rhs = table.w[Minv][t][u] + table.w[M][s][tu]
        if lhs != rhs:
            out.append(Violation("cocycle_law", f"w[M][s][t] + w[M][st][u] = {lhs} != {rhs}", (M, s, t, u)))
    return out


def _parse_values(raw, gamma: ValueGroup):
    if not isinstance(raw, list):
        raise InputError(Violation("schema", "cocycle_valuations must be a nested array"))
    try:
        return tuple(tuple(tuple(gamma.value(v) for v in row) for row in block) for block in raw)
    except (TypeError, ValueError) as exc:
        raise InputError(Violation("schema", f"bad value in cocycle_valuations: {exc}")) from exc


def build_profile(group_table, r, action, gamma: ValueGroup, mode=ABSTRACT) -> ValuationProfile:
    try:
        G = FiniteGroup.from_table(group_table)
        if not isinstance(r, int) or isinstance(r, bool) or r < 1:
            raise GroupTableError("ideals", f"ideals must be a positive integer, got {r!r}")
        check_action(G, action, r)
    except GroupTableError as exc:
        raise InputError(Violation(exc.code, str(exc), tuple(exc.witness or ()))) from exc
    profile = ValuationProfile(G, r, tuple(tuple(a) for a in action), gamma, mode)
    sizes = {len([s for s in G.elements() if profile.action[s][M] == M]) for M in range(r)}
    if sizes != {G.order // r} or G.order % r:
        raise InputError(Violation("stabilizer_order", f"stabilizer orders {sorted(sizes)} are not all n/r"))
    return profile


def validate_abstract(doc: dict) -> tuple[ValuationProfile, ValuationTable]:
    """Parse and fully check an abstract document; raises InputError listing violations."""
    for key in ("group", "ideals", "action", "value_group", "cocycle_valuations"):
        if key not in doc:
            raise InputError(Violation("schema", f"missing key {key!r}"))
    try:
        gamma = ValueGroup.from_json(doc["value_group"])
    except ValueError as exc:
        raise InputError(Violation("schema", str(exc))) from exc
    profile = build_profile(doc["group"], doc["ideals"], doc["action"], gamma)
    table = ValuationTable(_parse_values(doc["cocycle_valuations"], gamma), gamma)
    bad = table_violations(profile, table)
    if bad:
        raise InputError(bad)
    return profile, table


def profile_to_json(profile: ValuationProfile, table: ValuationTable) -> dict:
    return {
        "mode": ABSTRACT,
        "group": [list(row) for row in profile.group.table],
        "ideals": profile.r,
        "action": [list(a) for a in profile.action],
        "value_group": profile.gamma.to_json(),
        "cocycle_valuations": table.to_json(),
    }


def restrict(profile: ValuationProfile, table: ValuationTable, subgroup: Sequence[int],
             M0: int) -> tuple[ValuationProfile, ValuationTable]:
    """Restrict to a subgroup G_L and the ideals over one valuation ring U of L.

    The ideals kept are the orbit of M0 under the subgroup; for the
    decomposition group of M0 this is {M0} alone.
    """
    if not 0 <= M0 < profile.r:
        raise InputError(Violation("ideal_index", f"ideal {M0} out of range", (M0,)))
    try:
        sub, elems = profile.group.restrict(subgroup)
    except GroupTableError as exc:
        raise InputError(Violation(exc.code, str(exc))) from exc
    orbit = sorted({profile.action[s][M0] for s in elems})
    pos = {M: i for i, M in enumerate(orbit)}
    action = tuple(tuple(pos[profile.action[s][M]] for M in orbit) for s in elems)
    w = tuple(tuple(tuple(table.w[M][s][t] for t in elems) for s in elems) for M in orbit)
    new = ValuationProfile(
        group=sub,
        r=len(orbit),
        action=action,
        gamma=profile.gamma,
        mode=ABSTRACT,
        element_labels=tuple(profile.element_labels[s] for s in elems),
        ideal_labels=tuple(profile.ideal_labels[M] for M in orbit),
    )
    return new, ValuationTable(w, table.gamma)


def coarsen_profile(profile: ValuationProfile, table: ValuationTable,
                    keep: int) -> tuple[ValuationProfile, ValuationTable]:
    """Pass to the overring W given by the convex subgroup 0^keep x Z^(n-keep).

    The ideal index set is kept as is, even where ideals merge over W.
    """
    if profile.mode == CONCRETE:
        raise InputError(Violation("coarsen_concrete", "rank-1 valuations have no proper coarsening"))
    try:
        target, project = coarsen(profile.gamma, keep)
    except ValueError as exc:
        raise InputError(Violation("coarsen", str(exc))) from exc
    new = ValuationProfile(profile.group, profile.r, profile.action, target, ABSTRACT,
                           element_labels=profile.element_labels, ideal_labels=profile.ideal_labels)
    return new, table.map(project, target)


def check_compatibility(profile: ValuationProfile, elements) -> list[Violation]:
    """Concrete mode: v_M(s(x)) = v_{s^-1 M}(x) on the given field elements."""
    sp = profile.splitting
    out = []
    for x in elements:
        if not x:
            continue
        for s in profile.group.elements():
            sx = sp.galois.apply(s, x)
            for M in range(profile.r):
                if sp.valuation(M, sx) != sp.valuation(profile.action[profile.group.inv(s)][M], x):
                    out.append(Violation("compatibility", f"v_M(s(x)) != v_(s^-1 M)(x) for x = {x!r}", (M, s)))
    return out
