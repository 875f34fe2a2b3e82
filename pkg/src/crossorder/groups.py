"""Finite groups given by multiplication tables, and their permutation actions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence


class GroupTableError(ValueError):
    def __init__(self, code: str, message: str, witness=None):
        super().__init__(message)
        self.code = code
        self.witness = witness


@dataclass(frozen=True)
class FiniteGroup:
    """Elements are 0..n-1; ``table[a][b]`` is the product ab (apply b first, then a)."""

    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> "FiniteGroup":
        n = len(table)
        if n == 0:
            raise GroupTableError("group_empty", "group table is empty")
        for a, row in enumerate(table):
            if len(row) != n:
                raise GroupTableError("group_shape", f"row {a} has length {len(row)}, expected {n}", (a,))
            for b, c in enumerate(row):
                if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < n:
                    raise GroupTableError("group_entry", f"entry ({a},{b}) = {c!r} out of range", (a, b))
        ids = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
        if not ids:
            raise GroupTableError("group_identity", "no two-sided identity")
        e = ids[0]
        inverses = []
        for a in range(n):
            inv = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
            if not inv:
                raise GroupTableError("group_inverse", f"element {a} has no inverse", (a,))
            inverses.append(inv[0])
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupTableError("group_associativity", f"(ab)c != a(bc) at {(a, b, c)}", (a, b, c))
        return cls(tuple(tuple(r) for r in table), e, tuple(inverses))

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        if self.identity not in s or not s <= set(self.elements()):
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def subgroups(self) -> list[tuple[int, ...]]:
        """All subgroups, by brute force over subsets containing the identity.

        Fine for the desk-scale orders (<= 8) this package targets.
        """
        others = [a for a in self.elements() if a != self.identity]
        found = []
        for k in range(len(others) + 1):
            for combo in combinations(others, k):
                s = (self.identity,) + combo
                if self.order % len(s) == 0 and self.is_subgroup(s):
                    found.append(tuple(sorted(s)))
        return found

    def right_cosets(self, sub: Sequence[int]) -> list[tuple[int, ...]]:
        """Right cosets D*g of a subgroup D, each sorted, ordered by smallest member."""
        seen: set[int] = set()
        cosets = []
        for g in self.elements():
            if g in seen:
                continue
            coset = tuple(sorted({self.table[d][g] for d in sub}))
            seen.update(coset)
            cosets.append(coset)
        return cosets

    def restrict(self, sub: Sequence[int]) -> tuple["FiniteGroup", list[int]]:
        """The subgroup as a group in its own right, with the map new index -> old index."""
        elems = sorted(sub)
        if not self.is_subgroup(elems):
            raise GroupTableError("subgroup_not_closed", f"{elems} is not a subgroup")
        pos = {g: i for i, g in enumerate(elems)}
        table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        return FiniteGroup.from_table(table), elems


def check_action(group: FiniteGroup, action: Sequence[Sequence[int]], r: int) -> None:
    """Verify a permutation action of ``group`` on {0..r-1}: a transitive homomorphism.

    ``action[g][i]`` is the image of point i under g.  Raises ``GroupTableError``.
    """
    n = group.order
    if len(action) != n:
        raise GroupTableError("action_shape", f"action has {len(action)} rows, group has {n} elements")
    for g, perm in enumerate(action):
        if len(perm) != r or sorted(perm) != list(range(r)):
            raise GroupTableError("action_not_permutation", f"action of {g} is not a permutation of 0..{r - 1}", (g,))
    if list(action[group.identity]) != list(range(r)):
        raise GroupTableError("action_identity", "identity does not act trivially", (group.identity,))
    for a in range(n):
        for b in range(n):
            ab = group.table[a][b]
            for i in range(r):
                if action[ab][i] != action[a][action[b][i]]:
                    raise GroupTableError(
                        "action_homomorphism",
                        f"(ab)(M{i}) != a(b(M{i})) for a={a}, b={b}",
                        (a, b, i),
                    )
    orbit = {action[g][0] for g in range(n)}
    if len(orbit) != r:
        missing = min(set(range(r)) - orbit)
        raise GroupTableError("action_not_transitive", f"ideal {missing} is not in the orbit of ideal 0", (missing,))
