"""Seeded generators of valid abstract valuation data.

Tables are built as  w = carry + delta(c):

* ``carry`` is t * [pi(s) + pi(t) >= m] for a homomorphism pi: G -> Z/m,
  the valuation shadow of an F-valued cocycle inflated from a cyclic
  quotient (the same value at every ideal);
* ``delta(c)[M][s][t] = c[s][M] + c[t][s^-1 M] - c[st][M]`` is the
  valuation shadow of the coboundary of cochain values c_s in K^#.

Both satisfy the valuation-level cocycle law.  Every draw is passed
through ``table_violations`` and rejected if invalid (negative entries).
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .groups import FiniteGroup
from .profile import ABSTRACT, ValuationProfile, ValuationTable, table_violations
from .valuegroup import Value, ValueGroup


# ---------------------------------------------------------------- group catalogue

def group_from_perms(gens: list[tuple[int, ...]]) -> FiniteGroup:
    """Permutation group generated by ``gens``; product ab means apply b, then a."""
    k = len(gens[0])
    e = tuple(range(k))
    elems = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(k))
                if y not in elems:
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[tuple(a[b[i]] for i in range(k))] for b in elems] for a in elems]
    return FiniteGroup.from_table(table)


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_table([[(a + b) % n for b in range(n)] for a in range(n)])


def abelian(*orders: int) -> FiniteGroup:
    elems = list(product(*(range(m) for m in orders)))
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[tuple((u + v) % m for u, v, m in zip(a, b, orders))] for b in elems] for a in elems]
    return FiniteGroup.from_table(table)


def quaternion8() -> FiniteGroup:
    # units (sign, k) with k in 1, i, j, k encoded 0..3
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, k) for s in (1, -1) for k in range(4)]
    pos = {x: i for i, x in enumerate(elems)}

    def mul(a, b):
        sign, k = mult[(a[1], b[1])]
        return (a[0] * b[0] * sign, k)

    return FiniteGroup.from_table([[pos[mul(a, b)] for b in elems] for a in elems])


@lru_cache(maxsize=None)
def catalogue() -> dict[str, FiniteGroup]:
    groups = {f"C{n}": cyclic(n) for n in range(1, 9)}
    groups["C2xC2"] = abelian(2, 2)
    groups["C2xC4"] = abelian(2, 4)
    groups["C2xC2xC2"] = abelian(2, 2, 2)
    groups["S3"] = group_from_perms([(1, 0, 2), (1, 2, 0)])
    groups["D4"] = group_from_perms([(1, 2, 3, 0), (3, 2, 1, 0)])
    groups["Q8"] = quaternion8()
    return groups


def coset_action(G: FiniteGroup, D) -> list[list[int]]:
    """Action of G on the left cosets gD by left multiplication; coset 0 is D."""
    cosets: list[frozenset] = []
    for g in G.elements():
        c = frozenset(G.mul(g, d) for d in D)
        if c not in cosets:
            cosets.append(c)
    cosets.sort(key=lambda c: (G.identity not in c, min(c)))
    idx = {}
    for i, c in enumerate(cosets):
        for g in c:
            idx[g] = i
    return [[idx[G.mul(g, min(c))] for c in cosets] for g in G.elements()]


@lru_cache(maxsize=None)
def _homs(G: FiniteGroup, m: int) -> tuple[tuple[int, ...], ...]:
    """All homomorphisms G -> Z/m, by brute force over generator images."""
    gens: list[int] = []
    span = {G.identity}
    for g in G.elements():
        if g not in span:
            gens.append(g)
            span = _closure(G, gens)
    found = []
    for imgs in product(range(m), repeat=len(gens)):
        phi = {G.identity: 0}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, im in zip(gens, imgs):
                    y = G.mul(g, x)
                    val = (im + phi[x]) % m
                    if y in phi:
                        if phi[y] != val:
                            ok = False
                            break
                    else:
                        phi[y] = val
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and all((phi[a] + phi[b]) % m == phi[G.mul(a, b)] for a in G.elements() for b in G.elements()):
            found.append(tuple(phi[g] for g in G.elements()))
    return tuple(found)


def _closure(G: FiniteGroup, gens) -> set[int]:
    span = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(g, x)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return span


# ---------------------------------------------------------------- values

def _small_positive(rng: random.Random, gamma: ValueGroup) -> Value:
    if gamma.kind == "dense_q":
        return gamma.value(Fraction(rng.randint(1, 6), rng.randint(1, 6)))
    if gamma.rank == 1 or rng.random() < 0.6:
        return Value((0,) * (gamma.rank - 1) + (rng.randint(1, 2),), gamma)
    lead = rng.randrange(gamma.rank - 1)
    vec = [0] * gamma.rank
    vec[lead] = 1
    for i in range(lead + 1, gamma.rank):
        vec[i] = rng.randint(-2, 2)
    return Value(tuple(vec), gamma)


def _between(rng: random.Random, low: Value) -> Value:
    """A value x with low <= x <= 2*low (low > 0)."""
    gamma = low.group
    if gamma.kind == "dense_q":
        return gamma.value(low.payload * (1 + Fraction(rng.randint(0, 4), 4)))
    vec = list(low.payload)
    lead = next(i for i, x in enumerate(vec) if x)
    # add a nonnegative amount no larger than low
    add = [0] * len(vec)
    if lead == len(vec) - 1:
        add[lead] = rng.randint(0, vec[lead])
    else:
        add[-1] = rng.randint(0, 3)
    return Value(tuple(a + b for a, b in zip(vec, add)), gamma)


# ---------------------------------------------------------------- tables

def _carry(G: FiniteGroup, r: int, rng: random.Random, gamma: ValueGroup):
    zero = gamma.zero()
    m = rng.choice([2, 3, 4])
    homs = [h for h in _homs(G, m) if any(h)]
    if not homs:
        return [[[zero] * G.order for _ in G.elements()] for _ in range(r)]
    pi = rng.choice(homs)
    t = gamma.min_positive() if gamma.is_discrete() and rng.random() < 0.7 else _small_positive(rng, gamma)
    block = [[t if pi[a] + pi[b] >= m else zero for b in G.elements()] for a in G.elements()]
    return [block for _ in range(r)]


def _coboundary(G: FiniteGroup, action, r: int, c) -> list:
    n = G.order
    return [
        [[c[s][M] + c[t][action[G.inv(s)][M]] - c[G.mul(s, t)][M] for t in range(n)] for s in range(n)]
        for M in range(r)
    ]


def random_data(rng: random.Random, gamma: ValueGroup, *, max_order: int = 8,
                group_name: str | None = None, max_tries: int = 200) -> tuple[ValuationProfile, ValuationTable]:
    """One seeded random valid (profile, table) pair."""
    groups = {k: g for k, g in catalogue().items() if g.order <= max_order}
    name = group_name or rng.choice(sorted(groups))
    G = groups[name]
    D = rng.choice(G.subgroups())
    action = coset_action(G, D)
    r = len(action[0])
    profile = ValuationProfile(G, r, tuple(tuple(a) for a in action), gamma, ABSTRACT)
    zero = gamma.zero()
    n = G.order
    for _ in range(max_tries):
        mode = rng.choice(["unit", "carry", "bounded", "sparse", "mixed"])
        c = [[zero] * r for _ in range(n)]
        if mode in ("bounded", "mixed"):
            low = _small_positive(rng, gamma)
            c = [[zero] * r if s == G.identity else [_between(rng, low) for _ in range(r)] for s in range(n)]
        elif mode == "sparse":
            unit = gamma.min_positive() if gamma.is_discrete() else _small_positive(rng, gamma)
            c = [[zero] * r if s == G.identity else [unit if rng.random() < 0.3 else zero for _ in range(r)]
                 for s in range(n)]
        w = _coboundary(G, action, r, c)
        if mode in ("carry", "mixed"):
            carry = _carry(G, r, rng, gamma)
            w = [[[w[M][s][t] + carry[M][s][t] for t in range(n)] for s in range(n)] for M in range(r)]
        table = ValuationTable(tuple(tuple(tuple(row) for row in block) for block in w), gamma)
        if not table_violations(profile, table):
            return profile, table
    raise RuntimeError("no valid table drawn; raise max_tries")


def random_tables(seed: int, count: int, gamma_choices=None, **kwargs):
    """``count`` valid random pairs from one seeded generator."""
    rng = random.Random(seed)
    if gamma_choices is None:
        gamma_choices = [ValueGroup.lex(1), ValueGroup.lex(2), ValueGroup.dense_q()]
    return [random_data(rng, rng.choice(gamma_choices), **kwargs) for _ in range(count)]
