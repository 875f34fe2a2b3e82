"""JSON input documents and report serialization.

A document describes one order, in one of two modes:

    {"mode": "concrete", "min_poly": [1, 0, 1], "automorphisms": [[0, 1], [0, -1]],
     "prime": 5, "cocycle": [[[1], [1]], [[1], [5]]]}

    {"mode": "abstract", "group": [[0, 1], [1, 0]], "ideals": 1, "action": [[0], [0]],
     "value_group": {"type": "dense_q"}, "cocycle_valuations": [[[0, 0], [0, "1/2"]]]}

Coefficient arrays are little-endian; rationals are ints or "p/q" strings.
Optional blocks: "twist" (concrete; group index -> coefficient array),
"restrict" ({"subgroup": [...], "ideal": i}) and "coarsen" ({"keep": k}).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import jsonschema

from .classify import ClassificationReport
from .cocycle import Cocycle, verify
from .errors import InputError, Violation
from .numberfield import GaloisDataError, NumberField, verify_galois
from .profile import ValuationProfile, ValuationTable, concrete_profile, validate_abstract
from .splitting import DEFAULT_PRECISION, PrimeSplitting, SplittingError

_rational = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*\d+\s*)?$"}]}
_coeffs = {"type": "array", "items": _rational}
_options = {
    "restrict": {
        "type": "object",
        "required": ["subgroup", "ideal"],
        "properties": {
            "subgroup": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
            "ideal": {"type": "integer", "minimum": 0},
        },
        "additionalProperties": False,
    },
    "coarsen": {
        "type": "object",
        "required": ["keep"],
        "properties": {"keep": {"type": "integer", "minimum": 1}},
        "additionalProperties": False,
    },
    "name": {"type": "string"},
    "description": {"type": "string"},
}

CONCRETE_SCHEMA = {
    "type": "object",
    "required": ["mode", "min_poly", "automorphisms", "prime", "cocycle"],
    "properties": {
        "mode": {"const": "concrete"},
        "min_poly": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
        "automorphisms": {"type": "array", "items": _coeffs, "minItems": 1},
        "prime": {"type": "integer", "minimum": 2},
        "cocycle": {"type": "array", "items": {"type": "array", "items": _coeffs}},
        "twist": {"type": "object", "patternProperties": {r"^\d+$": _coeffs}, "additionalProperties": False},
        **_options,
    },
    "additionalProperties": False,
}

_value = {"oneOf": [_rational, {"type": "array", "items": {"type": "integer"}, "minItems": 1}]}

ABSTRACT_SCHEMA = {
    "type": "object",
    "required": ["mode", "group", "ideals", "action", "value_group", "cocycle_valuations"],
    "properties": {
        "mode": {"const": "abstract"},
        "group": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "ideals": {"type": "integer", "minimum": 1},
        "action": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "value_group": {
            "oneOf": [
                {"type": "object", "properties": {"type": {"const": "lex"}, "rank": {"type": "integer", "minimum": 1}},
                 "required": ["type", "rank"], "additionalProperties": False},
                {"type": "object", "properties": {"type": {"const": "dense_q"}},
                 "required": ["type"], "additionalProperties": False},
            ]
        },
        "cocycle_valuations": {"type": "array", "items": {"type": "array", "items": {"type": "array", "items": _value}}},
        **_options,
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["mode", "branch", "n", "r", "semihereditary", "extremal", "primary", "valuation_ring",
                 "maximal", "bezout", "azumaya", "H", "decomposition_groups", "local_H", "witnesses"],
    "properties": {
        "mode": {"enum": ["concrete", "abstract"]},
        "branch": {"enum": ["principal", "non-principal"]},
        "n": {"type": "integer"},
        "r": {"type": "integer"},
        **{k: {"type": "boolean"} for k in ("semihereditary", "extremal", "primary", "valuation_ring",
                                             "maximal", "bezout", "azumaya")},
        "H": {"type": "array", "items": {"type": "integer"}},
        "decomposition_groups": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "local_H": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "witnesses": {"type": "object"},
        "restriction_check": {"type": ["boolean", "null"]},
        "radical_bounds": {"type": ["array", "null"]},
        "residue": {"type": ["object", "null"]},
    },
    "additionalProperties": False,
}


@dataclass
class Document:
    mode: str
    profile: ValuationProfile
    table: ValuationTable
    raw: dict = field(repr=False)
    cocycle: Optional[Cocycle] = None
    splitting: Optional[PrimeSplitting] = None


def _schema_errors(raw, schema) -> list[Violation]:
    validator = jsonschema.Draft7Validator(schema)
    out = []
    for err in sorted(validator.iter_errors(raw), key=lambda e: list(e.absolute_path)):
        path = "/".join(str(p) for p in err.absolute_path) or "<root>"
        out.append(Violation("schema", f"field {path}: {err.message}", tuple(err.absolute_path)))
    return out


def check_schema(raw) -> None:
    if not isinstance(raw, dict):
        raise InputError(Violation("schema", "document must be a JSON object"))
    mode = raw.get("mode")
    if mode not in ("concrete", "abstract"):
        raise InputError(Violation("schema", "field mode: must be 'concrete' or 'abstract'", ("mode",)))
    bad = _schema_errors(raw, CONCRETE_SCHEMA if mode == "concrete" else ABSTRACT_SCHEMA)
    if bad:
        raise InputError(bad)


def read_json(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(Violation("json", f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}",
                                   (exc.lineno, exc.colno))) from exc


def load_concrete_parts(raw: dict, *, seed=None, precision=DEFAULT_PRECISION):
    """Field, Galois group, splitting and cocycle of a concrete document (no cocycle checks)."""
    try:
        field_ = NumberField(raw["min_poly"])
        galois = verify_galois(field_, raw["automorphisms"])
    except GaloisDataError as exc:
        raise InputError(Violation(exc.code, str(exc), tuple(exc.witness or ()))) from exc
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(Violation("number_field", str(exc), ("min_poly",))) from exc
    try:
        splitting = PrimeSplitting(galois, raw["prime"], seed=seed, precision=precision)
    except SplittingError as exc:
        raise InputError(Violation(exc.code, str(exc), ("prime",))) from exc
    cocycle = Cocycle.from_json(galois, raw["cocycle"])
    return galois, splitting, cocycle


def load(raw: dict, *, seed=None, precision=DEFAULT_PRECISION) -> Document:
    """Parse and fully validate a document; raises InputError."""
    check_schema(raw)
    if raw["mode"] == "abstract":
        profile, table = validate_abstract(raw)
        return Document("abstract", profile, table, raw)
    galois, splitting, cocycle = load_concrete_parts(raw, seed=seed, precision=precision)
    table = verify(cocycle, splitting)
    return Document("concrete", concrete_profile(splitting), table, raw, cocycle, splitting)


def load_path(path, **kwargs) -> Document:
    return load(read_json(path), **kwargs)


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def parse_report(data: dict):
    """Schema-check a serialized report and rebuild it."""
    bad = _schema_errors(data, REPORT_SCHEMA)
    if bad:
        raise InputError(bad)
    return ClassificationReport.from_json(data)
