"""Command-line front end.

    crossorder classify doc.json [--format json]
    crossorder validate doc.json
    crossorder twist | restrict | coarsen doc.json
    crossorder classify --batch fixtures/ --jobs 4
    crossorder selftest

Exit codes: 0 computed, 2 invalid input, 3 internal contradiction.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import documents
from .classify import classify, overring_azumaya_check
from .cocycle import twist
from .errors import Contradiction, InputError, Violation
from .profile import coarsen_profile, profile_to_json, restrict, table_violations
from .selftest import run_selftest
from .splitting import DEFAULT_PRECISION

EXIT_OK, EXIT_INPUT, EXIT_CONTRADICTION = 0, 2, 3
COMMANDS = ("validate", "classify", "twist", "restrict", "coarsen", "selftest")


# ---------------------------------------------------------------- commands

def _validate(doc: documents.Document, opts) -> dict:
    checks = ["schema"]
    if doc.mode == "concrete":
        checks += ["galois_group", "prime_splitting", "galois_action", "cocycle_identity", "integrality"]
    checks.append("valuation_table")
    # the computed table must satisfy the valuation-level law; failure is ours, not the input's
    bad = table_violations(doc.profile, doc.table)
    if bad:
        raise Contradiction("valuation_table", bad[0].message, bad[0].witness)
    return {"valid": True, "mode": doc.mode, "n": doc.profile.n, "r": doc.profile.r, "checks": checks}


def _classify(doc: documents.Document, opts) -> dict:
    report = classify(doc.table, doc.profile, doc.cocycle, doc.splitting)
    keep = opts.keep if opts.keep is not None else (doc.raw.get("coarsen") or {}).get("keep")
    if keep is not None and doc.mode == "abstract" and doc.profile.gamma.is_discrete():
        ok = overring_azumaya_check(doc.table, doc.profile, keep)
        report.witnesses = dict(report.witnesses)
        if ok is not None:
            report.witnesses["overring_azumaya"] = [keep, ok]
    return report.to_json()


def _twist(doc: documents.Document, opts) -> dict:
    if doc.mode != "concrete":
        raise InputError(Violation("twist_mode", "twisting needs a concrete document", ("mode",)))
    raw = doc.raw.get("twist")
    if not raw:
        raise InputError(Violation("twist_missing", "document has no twist block", ("twist",)))
    coeffs = {}
    for key, arr in raw.items():
        s = int(key)
        if s >= doc.profile.n:
            raise InputError(Violation("twist_index", f"group index {s} out of range", ("twist", key)))
        coeffs[s] = doc.cocycle.field.element(arr)
    g = twist(doc.cocycle, coeffs, doc.splitting)
    out = {k: v for k, v in doc.raw.items() if k != "twist"}
    out["cocycle"] = g.to_json()
    return out


def _restrict(doc: documents.Document, opts) -> dict:
    block = dict(doc.raw.get("restrict") or {})
    if opts.subgroup is not None:
        block["subgroup"] = opts.subgroup
    if opts.ideal is not None:
        block["ideal"] = opts.ideal
    if "subgroup" not in block:
        raise InputError(Violation("restrict_missing", "no subgroup given (restrict block or --subgroup)", ("restrict",)))
    rp, rt = restrict(doc.profile, doc.table, block["subgroup"], block.get("ideal", 0))
    return profile_to_json(rp, rt)


def _coarsen(doc: documents.Document, opts) -> dict:
    keep = opts.keep if opts.keep is not None else (doc.raw.get("coarsen") or {}).get("keep")
    if keep is None:
        raise InputError(Violation("coarsen_missing", "no rank given (coarsen block or --keep)", ("coarsen",)))
    cp, ct = coarsen_profile(doc.profile, doc.table, keep)
    return profile_to_json(cp, ct)


HANDLERS = {"validate": _validate, "classify": _classify, "twist": _twist,
            "restrict": _restrict, "coarsen": _coarsen}


# ---------------------------------------------------------------- running

def run_one(command: str, path, opts) -> tuple[int, dict]:
    """Run one command on one document; returns (exit code, JSON payload)."""
    try:
        doc = documents.load_path(path, seed=opts.seed, precision=opts.precision)
        return EXIT_OK, HANDLERS[command](doc, opts)
    except InputError as exc:
        return EXIT_INPUT, {"error": "invalid_input", "violations": [v.to_json() for v in exc.violations]}
    except OSError as exc:
        return EXIT_INPUT, {"error": "invalid_input",
                            "violations": [Violation("io", str(exc), (str(path),)).to_json()]}
    except Contradiction as exc:
        return EXIT_CONTRADICTION, {"error": "contradiction", "check": exc.check, "message": str(exc),
                                    "witness": list(exc.witness)}


def _job(args):
    command, path, opts = args
    return run_one(command, path, opts)


def _render(command: str, code: int, payload: dict, fmt: str) -> str:
    if fmt == "json":
        return documents.dumps(payload)
    if code == EXIT_INPUT:
        return "\n".join(["invalid input"] + [_violation_line(v) for v in payload["violations"]])
    if code == EXIT_CONTRADICTION:
        return f"internal contradiction in {payload['check']}: {payload['message']}"
    if command == "classify":
        return documents.ClassificationReport.from_json(payload).to_text()
    if command == "validate":
        return "\n".join(f"{c}: ok" for c in payload["checks"]) + f"\nvalid {payload['mode']} document, |G| = {payload['n']}, r = {payload['r']}"
    # transformed documents are always re-serializable JSON
    return documents.dumps(payload)


def _violation_line(v: dict) -> str:
    at = f" at {tuple(v['witness'])}" if v["witness"] else ""
    return f"  [{v['code']}]{at}: {v['message']}"


def _batch(command: str, directory: Path, opts) -> tuple[int, list[tuple[str, int, dict]]]:
    paths = sorted(p for p in directory.iterdir() if p.suffix == ".json" and p.name != "manifest.json")
    jobs = [(command, p, opts) for p in paths]
    if opts.jobs and opts.jobs > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            results = list(pool.map(_job, jobs))
    else:
        results = [_job(j) for j in jobs]
    rows = [(p.name, code, payload) for p, (code, payload) in zip(paths, results)]
    return max((code for _, code, _ in rows), default=EXIT_OK), rows


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crossorder", description="Classify crossed-product orders from cocycle valuations.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("document", nargs="?", help="input JSON document")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--batch", metavar="DIR", help="process every *.json in DIR, in sorted order")
    ap.add_argument("--seed", type=int, default=None, help="seed for equal-degree factorization")
    ap.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="K0",
                    help="initial p-adic precision of the lifted factors")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    ap.add_argument("--subgroup", type=lambda s: [int(x) for x in s.split(",")], default=None,
                    help="restrict: comma-separated subgroup elements")
    ap.add_argument("--ideal", type=int, default=None, help="restrict: index of the ideal M0")
    ap.add_argument("--keep", type=int, default=None, help="coarsen: rank of the coarser value group")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    opts = ap.parse_args(argv)
    if opts.precision < 1:
        ap.error("--precision must be positive")
    if opts.command == "selftest":
        return run_selftest(fmt=opts.format, seed=opts.seed, precision=opts.precision)
    if opts.batch:
        directory = Path(opts.batch)
        if not directory.is_dir():
            ap.error(f"--batch: {directory} is not a directory")
        code, rows = _batch(opts.command, directory, opts)
        if opts.format == "json":
            print(documents.dumps([{"file": name, "exit": c, "result": payload} for name, c, payload in rows]))
        else:
            for name, c, payload in rows:
                print(f"== {name} (exit {c})")
                print(_render(opts.command, c, payload, "text"))
        return code
    if not opts.document:
        ap.error("a document path or --batch is required")
    code, payload = run_one(opts.command, opts.document, opts)
    out = _render(opts.command, code, payload, opts.format)
    print(out, file=sys.stderr if code and opts.format == "text" else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
