"""Ordered abelian value groups and the M^2 threshold.

Two families are supported: lexicographically ordered Z^n (discrete,
leftmost coordinate most significant) and the dense group Q.  Values are
immutable and exact; operations across different groups raise ``ValueError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

LEX = "lex"
DENSE_Q = "dense_q"


@dataclass(frozen=True)
class ValueGroup:
    kind: str
    rank: int = 1

    def __post_init__(self):
        if self.kind == LEX:
            if not isinstance(self.rank, int) or self.rank < 1:
                raise ValueError(f"lex group needs rank >= 1, got {self.rank!r}")
        elif self.kind == DENSE_Q:
            object.__setattr__(self, "rank", 1)
        else:
            raise ValueError(f"unknown value group kind {self.kind!r}")

    @classmethod
    def lex(cls, rank: int = 1) -> "ValueGroup":
        return cls(LEX, rank)

    @classmethod
    def dense_q(cls) -> "ValueGroup":
        return cls(DENSE_Q)

    def is_discrete(self) -> bool:
        return self.kind == LEX

    def zero(self) -> "Value":
        if self.kind == LEX:
            return Value((0,) * self.rank, self)
        return Value(Fraction(0), self)

    def min_positive(self) -> "Value":
        if not self.is_discrete():
            raise ValueError("dense group has no minimal positive element")
        return Value((0,) * (self.rank - 1) + (1,), self)

    def value(self, payload) -> "Value":
        """Build a value from an int, a sequence of ints, a Fraction or a "p/q" string."""
        if self.kind == LEX:
            if isinstance(payload, int) and not isinstance(payload, bool):
                payload = (payload,)
            if not isinstance(payload, (list, tuple)):
                raise ValueError(f"expected {self.rank} integers, got {payload!r}")
            payload = tuple(payload)
            if len(payload) != self.rank or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in payload
            ):
                raise ValueError(f"expected {self.rank} integers, got {payload!r}")
            return Value(payload, self)
        if isinstance(payload, bool) or not isinstance(payload, (int, str, Fraction)):
            raise ValueError(f"expected a rational, got {payload!r}")
        return Value(Fraction(payload), self)

    def to_json(self) -> dict:
        if self.kind == LEX:
            return {"type": "lex", "rank": self.rank}
        return {"type": "dense_q"}

    @classmethod
    def from_json(cls, data) -> "ValueGroup":
        if not isinstance(data, dict) or "type" not in data:
            raise ValueError(f"value group must be an object with a 'type' key, got {data!r}")
        if data["type"] == "lex":
            return cls.lex(data.get("rank", 1))
        if data["type"] == "dense_q":
            return cls.dense_q()
        raise ValueError(f"unknown value group type {data['type']!r}")

    def __str__(self):
        return f"Z^{self.rank} (lex)" if self.kind == LEX else "Q"


Payload = Union[tuple, Fraction]


@dataclass(frozen=True)
class Value:
    payload: Payload
    group: ValueGroup

    def _check(self, other) -> None:
        if not isinstance(other, Value):
            raise TypeError(f"cannot combine Value with {type(other).__name__}")
        if other.group != self.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other: "Value") -> "Value":
        self._check(other)
        if self.group.kind == LEX:
            return Value(tuple(a + b for a, b in zip(self.payload, other.payload)), self.group)
        return Value(self.payload + other.payload, self.group)

    def __neg__(self) -> "Value":
        if self.group.kind == LEX:
            return Value(tuple(-a for a in self.payload), self.group)
        return Value(-self.payload, self.group)

    def __sub__(self, other: "Value") -> "Value":
        return self + (-other)

    def __mul__(self, k: int) -> "Value":
        if not isinstance(k, int):
            return NotImplemented
        if self.group.kind == LEX:
            return Value(tuple(k * a for a in self.payload), self.group)
        return Value(k * self.payload, self.group)

    __rmul__ = __mul__

    # Tuples already compare lexicographically, leftmost coordinate first.
    def __lt__(self, other: "Value") -> bool:
        self._check(other)
        return self.payload < other.payload

    def __le__(self, other: "Value") -> bool:
        self._check(other)
        return self.payload <= other.payload

    def __gt__(self, other: "Value") -> bool:
        self._check(other)
        return self.payload > other.payload

    def __ge__(self, other: "Value") -> bool:
        self._check(other)
        return self.payload >= other.payload

    def is_zero(self) -> bool:
        return self == self.group.zero()

    def is_positive(self) -> bool:
        return self > self.group.zero()

    def to_json(self):
        if self.group.kind == LEX:
            return list(self.payload)
        q = self.payload
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    def __str__(self):
        if self.group.kind == LEX:
            return str(self.payload[0]) if self.group.rank == 1 else str(self.payload)
        return str(self.payload)


def compare(a: Value, b: Value) -> int:
    """Return -1, 0 or 1 as a is less than, equal to or greater than b."""
    a._check(b)
    if a < b:
        return -1
    return 0 if a == b else 1


def in_m_squared(v: Value) -> bool:
    """Whether an element of S with value v at M lies in M^2.

    For a discrete group this is v >= 2*min_positive.  For a dense group
    M^2 = M, so any positive value qualifies.
    """
    g = v.group
    if v < g.zero():
        raise ValueError(f"in_m_squared needs a nonnegative value, got {v}")
    if g.is_discrete():
        return v >= 2 * g.min_positive()
    return v > g.zero()


def coarsen(g: ValueGroup, keep: int) -> tuple[ValueGroup, Callable[[Value], Value]]:
    """Quotient of Z^n (lex) by the convex subgroup 0^keep x Z^(n-keep).

    Corresponds to passing from V to an overring W.  Returns the quotient
    group and the projection, which drops the trailing coordinates.
    """
    if not g.is_discrete():
        raise ValueError("dense Q has no proper nontrivial convex subgroup")
    if not isinstance(keep, int) or not 1 <= keep < g.rank:
        raise ValueError(f"keep must satisfy 1 <= keep < {g.rank}, got {keep!r}")
    target = ValueGroup.lex(keep)

    def project(v: Value) -> Value:
        if v.group != g:
            raise ValueError(f"group mismatch: {v.group} vs {g}")
        return Value(v.payload[:keep], target)

    return target, project
