"""Exception types shared across the package.

``InputError`` means the supplied data violates a precondition (CLI exit 2).
``Contradiction`` means two independent routes to the same verdict
disagreed (CLI exit 3); it should never fire on valid input.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    witness: tuple = field(default=())

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "witness": list(self.witness)}

    def __str__(self):
        w = f" at {self.witness}" if self.witness else ""
        return f"[{self.code}]{w}: {self.message}"


class InputError(ValueError):
    def __init__(self, violations):
        if isinstance(violations, Violation):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def code(self) -> str:
        return self.violations[0].code if self.violations else "invalid"


class Contradiction(RuntimeError):
    def __init__(self, check: str, message: str, witness=()):
        super().__init__(f"{check}: {message}" + (f" (witness {witness})" if witness else ""))
        self.check = check
        self.witness = witness
