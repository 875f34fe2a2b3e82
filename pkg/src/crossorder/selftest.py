"""Run the shipped fixture corpus against its manifest plus the cross-checks.

Prints a pass/fail matrix (fixtures x checks); exit status 0 when every
cell passes, 3 otherwise.
"""

from __future__ import annotations

import json
import random
from importlib.resources import files
from pathlib import Path
from typing import Callable, Optional

from . import documents, order
from .classify import classify, overring_azumaya_check
from .cocycle import Cocycle, twist
from .errors import Contradiction, InputError
from .randomtables import random_tables
from .splitting import DEFAULT_PRECISION, random_integral, vp_norm

CHECKS = ("report", "associativity", "norm", "radical", "overring", "restriction")
PASS, FAIL, SKIP = "PASS", "FAIL", "-"
SAMPLES = 10
RANDOM_TABLES = 100


def fixtures_dir() -> Path:
    return Path(str(files("crossorder") / "fixtures"))


def load_manifest() -> dict:
    return json.loads((fixtures_dir() / "manifest.json").read_text(encoding="utf-8"))


# ---------------------------------------------------------------- per-fixture checks

def _report(entry, raw, doc, report, err) -> bool:
    if "expect_error" in entry:
        want = entry["expect_error"]
        return err is not None and any(
            v.code == want["code"] and list(v.witness) == want.get("witness", list(v.witness))
            for v in err.violations)
    if report is None:
        return False
    data = report.to_json()
    return all(data.get(k) == v for k, v in entry["expect"].items())


def _associativity(entry, raw, doc, report, err, *, seed=None, precision=DEFAULT_PRECISION) -> Optional[bool]:
    if raw["mode"] != "concrete":
        return None
    _, _, c = documents.load_concrete_parts(raw, seed=seed, precision=precision)
    failures = order.basis_associativity_failures(c)
    identity_bad = [tuple(v.witness) for v in c.structural_violations() if v.code == "cocycle_identity"]
    # the cocycle identity at (s,t,u) is associativity of x_s x_t x_u
    return sorted(failures) == sorted(identity_bad)


def _norm(entry, raw, doc, report, err, rng) -> Optional[bool]:
    if doc is None or doc.splitting is None:
        return None
    sp = doc.splitting
    for _ in range(SAMPLES):
        a = random_integral(sp, rng)
        if sum(sp.f * sp.valuation_int(M, a) for M in range(sp.r)) != vp_norm(sp.field, a, sp.p):
            return False
    return True


def _radical(entry, raw, doc, report, err, rng) -> Optional[bool]:
    if doc is None or not doc.profile.gamma.is_discrete():
        return None
    J = order.jacobson_radical(doc.table, doc.profile)
    ok, _ = order.verify_radical_is_ideal(J, doc.table, doc.profile)
    if not ok:
        return False
    if doc.splitting is None:
        return True
    sp, G = doc.splitting, doc.profile.group
    for s in G.elements():
        f = doc.cocycle(s, G.inv(s))
        for _ in range(SAMPLES):
            x = random_integral(sp, rng)
            vals = [sp.valuation(M, x) for M in range(sp.r)]
            if J.contains(s, vals) != order.in_jvs_times(x, f, sp):
                return False
    return True


def _overring(entry, raw, doc, report, err) -> Optional[bool]:
    if doc is None or doc.mode != "abstract" or not doc.profile.gamma.is_discrete() or "coarsen" not in raw:
        return None
    return overring_azumaya_check(doc.table, doc.profile, raw["coarsen"]["keep"]) in (True, None)


def _restriction(entry, raw, doc, report, err) -> Optional[bool]:
    if report is None:
        return None
    return report.restriction_check in (True, None) and (report.restriction_check is None) == (not report.semihereditary)


def _cell(fn: Callable, *args, **kwargs) -> str:
    try:
        out = fn(*args, **kwargs)
    except (Contradiction, InputError, ArithmeticError) as exc:
        return f"{FAIL} ({exc})"
    if out is None:
        return SKIP
    return PASS if out else FAIL


def check_fixture(entry: dict, *, seed=None, precision=DEFAULT_PRECISION) -> dict[str, str]:
    path = fixtures_dir() / entry["file"]
    raw = documents.read_json(path)
    rng = random.Random(f"{entry['file']}:{seed}")
    doc = report = err = None
    try:
        doc = documents.load(raw, seed=seed, precision=precision)
        report = classify(doc.table, doc.profile, doc.cocycle, doc.splitting)
    except InputError as exc:
        err = exc
    except Contradiction as exc:
        return {"report": f"{FAIL} ({exc})", **{c: SKIP for c in CHECKS[1:]}}
    ctx = (entry, raw, doc, report, err)
    return {
        "report": _cell(_report, *ctx),
        "associativity": _cell(_associativity, *ctx, seed=seed, precision=precision),
        "norm": _cell(_norm, *ctx, rng),
        "radical": _cell(_radical, *ctx, rng),
        "overring": _cell(_overring, *ctx),
        "restriction": _cell(_restriction, *ctx),
    }


def check_twist(item: dict, *, seed=None, precision=DEFAULT_PRECISION) -> str:
    base = documents.load_path(fixtures_dir() / item["file"], seed=seed, precision=precision)
    target = documents.load_path(fixtures_dir() / item["equals"], seed=seed, precision=precision)
    coeffs = {int(k): base.cocycle.field.element(v) for k, v in base.raw["twist"].items()}
    g = twist(base.cocycle, coeffs, base.splitting)
    return PASS if g == Cocycle.from_json(target.cocycle.galois, target.raw["cocycle"]) else FAIL


def check_random(count: int = RANDOM_TABLES, seed: int = 0) -> str:
    """Every predicate and cross-check on seeded random abstract tables."""
    try:
        for profile, table in random_tables(seed, count):
            classify(table, profile)
    except Contradiction as exc:
        return f"{FAIL} ({exc})"
    return PASS


# ---------------------------------------------------------------- driver

def collect(*, seed=None, precision=DEFAULT_PRECISION) -> dict:
    manifest = load_manifest()
    rows = {e["file"]: check_fixture(e, seed=seed, precision=precision) for e in manifest["fixtures"]}
    extra = {f"twist {t['file']} -> {t['equals']}": check_twist(t, seed=seed, precision=precision)
             for t in manifest.get("twists", [])}
    extra[f"random abstract tables ({RANDOM_TABLES})"] = check_random(seed=seed or 0)
    cells = [c for row in rows.values() for c in row.values()] + list(extra.values())
    return {
        "fixtures": rows,
        "extra": extra,
        "passed": sum(c == PASS for c in cells),
        "failed": sum(c.startswith(FAIL) for c in cells),
        "fixture_count": len(rows),
    }


def render(result: dict) -> str:
    width = max(len(k) for k in list(result["fixtures"]) + list(result["extra"]))
    lines = [" ".ljust(width) + "  " + "  ".join(c.ljust(13) for c in CHECKS)]
    for name, row in result["fixtures"].items():
        lines.append(name.ljust(width) + "  " + "  ".join(row[c][:13].ljust(13) for c in CHECKS))
    for name, cell in result["extra"].items():
        lines.append(name.ljust(width) + "  " + cell)
    failures = [f"{name}.{c}: {cell}" for name, row in result["fixtures"].items()
                for c, cell in row.items() if cell.startswith(FAIL)]
    lines += failures
    lines.append(f"{result['fixture_count']} fixtures, {result['passed']} checks passed, {result['failed']} failed")
    return "\n".join(lines)


def run_selftest(fmt: str = "text", seed=None, precision=DEFAULT_PRECISION) -> int:
    result = collect(seed=seed, precision=precision)
    print(documents.dumps(result) if fmt == "json" else render(result))
    return 0 if result["failed"] == 0 and result["passed"] > 0 else 3
