"""Batch verification runner.

One JSON document per invocation on standard output, human logs on standard
error.  Exit status: 0 pass (including sampled runs that found no
counterexample), 1 fail, 2 unknown check or manifest parse error, 3 budget
overrun, 4 precondition failure.

    exactlie run simplicity --ring fp:3
    exactlie run derivations --algebra lorentz --ring fp:2
    exactlie suite --manifest full --out report.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import PreconditionError, SizeLimit, UnknownCheck
from .checks import CheckDescriptor, full_suite_manifest, run_check

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_SIZE = 3
EXIT_PRECONDITION = 4


def _emit(doc: dict, out: str | None):
    text = json.dumps(doc, sort_keys=True, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _error_doc(exc: Exception) -> dict:
    return {
        "schema": 1,
        "error": {"type": type(exc).__name__, "message": str(exc)},
        "verdict": "error",
    }


def _descriptor_from_args(args) -> CheckDescriptor:
    return CheckDescriptor(
        check=args.check,
        ring=args.ring,
        algebra=args.algebra,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
        bound=args.bound,
    )


def _run_one(desc: CheckDescriptor):
    start = time.monotonic()
    passed, report = run_check(desc)
    report["timing_ms"] = round(1000 * (time.monotonic() - start), 3)
    return passed, report


def cmd_run(args) -> int:
    desc = _descriptor_from_args(args)
    try:
        passed, report = _run_one(desc)
    except UnknownCheck as exc:
        _emit(_error_doc(exc), args.out)
        return EXIT_UNKNOWN
    except SizeLimit as exc:
        _emit(_error_doc(exc), args.out)
        return EXIT_SIZE
    except PreconditionError as exc:
        _emit(_error_doc(exc), args.out)
        return EXIT_PRECONDITION
    print(f"[{desc.check}] {report['verdict']}", file=sys.stderr)
    _emit(report, args.out)
    return EXIT_PASS if passed else EXIT_FAIL


def _load_manifest(path: str):
    if path == "full":
        return full_suite_manifest()
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, list):
        raise ValueError("manifest must be a JSON array of check descriptors")
    return doc


def cmd_suite(args) -> int:
    try:
        entries = _load_manifest(args.manifest)
        descriptors = [CheckDescriptor.from_json(e) for e in entries]
    except (OSError, ValueError, PreconditionError, json.JSONDecodeError) as exc:
        _emit(_error_doc(exc), args.out)
        return EXIT_UNKNOWN
    reports = []
    all_pass = True
    for desc in descriptors:
        if args.seed is not None:
            desc.seed = args.seed
        try:
            passed, report = _run_one(desc)
        except UnknownCheck as exc:
            _emit(_error_doc(exc), args.out)
            return EXIT_UNKNOWN
        except SizeLimit as exc:
            report = _error_doc(exc)
            report["check"] = desc.check
            passed = False
        except PreconditionError as exc:
            report = _error_doc(exc)
            report["check"] = desc.check
            passed = False
        all_pass &= passed
        reports.append(report)
        label = report.get("verdict", "error")
        print(f"[{desc.check}] ring={desc.ring} {label}", file=sys.stderr)
    doc = {
        "schema": 1,
        "checks": reports,
        "verdict": "pass" if all_pass else "fail",
        "count": len(reports),
    }
    _emit(doc, args.out)
    return EXIT_PASS if all_pass else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactlie",
        description="Exact structure checks for Lorentz-type, orthogonal, sl2, "
                    "and Poincare-type Lie algebras over exact rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run a single named check")
    run_p.add_argument("check", help="check id (see the registry)")
    run_p.add_argument("--ring", help="ring spec: fp:<p> | fq:<p>^<n>[:coeffs] | "
                                      "zn:<n> | q | dup(<spec>) | prod(<spec>,<spec>)")
    run_p.add_argument("--algebra", help="catalog algebra for derivation checks")
    run_p.add_argument("--mode", choices=("auto", "full", "sampled"), default="auto")
    run_p.add_argument("--samples", type=int, default=None)
    run_p.add_argument("--seed", type=int, default=2025)
    run_p.add_argument("--budget", type=int, default=5_000_000)
    run_p.add_argument("--bound", type=int, default=None)
    run_p.add_argument("--out", default=None, help="also write the JSON report here")
    run_p.set_defaults(func=cmd_run)
    suite_p = sub.add_parser("suite", help="run a manifest of checks")
    suite_p.add_argument("--manifest", required=True,
                         help="path to a JSON array of descriptors, or 'full' "
                              "for the bundled acceptance manifest")
    suite_p.add_argument("--seed", type=int, default=None,
                         help="override the seed of every descriptor")
    suite_p.add_argument("--out", default=None)
    suite_p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
