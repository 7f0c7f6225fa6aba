"""Command-line interface: run verification checks and emit artifacts.

Subcommands:
  verify       run all (or selected) checks and print a text or JSON report
  list-checks  print the registered check ids with one-line descriptions
  emit         write the generators, reflections, full group or the outer
               automorphism table as JSON

Flags have environment-variable fallbacks (used only when the flag is
absent): G31_FORMAT, G31_SEED, G31_TRIALS, G31_OUT.

Exit codes: 0 when nothing failed (inconclusive does not fail the run),
1 when at least one check failed, 2 on usage errors such as unknown ids.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .build import G31Context
from .checks import CHECK_IDS, REGISTRY, RunConfig, run_checks
from .outer_s6 import get_tau


def _env_default(name: str, fallback, cast=str):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        return fallback


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g31",
        description="exact verification of the order-46080 rank-4 "
        "reflection group built from the hyperoctahedral group",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run verification checks")
    verify.add_argument(
        "--check",
        action="append",
        dest="checks",
        metavar="ID",
        help="check id to run (repeatable; default: all)",
    )
    verify.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="report format (default: text, or G31_FORMAT)",
    )
    verify.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized trials (default: 0, or G31_SEED)",
    )
    verify.add_argument(
        "--trials",
        type=int,
        default=None,
        help="trial count for randomized checks (default: 1000, or G31_TRIALS)",
    )
    verify.add_argument(
        "--out",
        default=None,
        help="write the report to this path instead of stdout (or G31_OUT)",
    )

    sub.add_parser("list-checks", help="list registered check ids")

    emit = sub.add_parser("emit", help="emit construction artifacts as JSON")
    emit.add_argument(
        "--what",
        required=True,
        choices=("generators", "reflections", "group", "tau"),
        help="which artifact to emit",
    )
    emit.add_argument(
        "--out",
        default=None,
        help="write to this path instead of stdout (or G31_OUT)",
    )
    return parser


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w"), True


def cmd_verify(args) -> int:
    fmt = args.format or _env_default("G31_FORMAT", "text")
    if fmt not in ("text", "json"):
        print(f"unknown format: {fmt}", file=sys.stderr)
        return 2
    seed = args.seed if args.seed is not None else _env_default("G31_SEED", 0, int)
    trials = (
        args.trials
        if args.trials is not None
        else _env_default("G31_TRIALS", 1000, int)
    )
    out_path = args.out if args.out is not None else os.environ.get("G31_OUT")
    ids = args.checks
    if ids:
        unknown = [i for i in ids if i not in CHECK_IDS]
        if unknown:
            print(f"unknown check id: {unknown[0]}", file=sys.stderr)
            print("known ids: " + ", ".join(CHECK_IDS), file=sys.stderr)
            return 2
    ctx = G31Context()
    results = run_checks(ctx, ids, RunConfig(seed=seed, trials=trials))
    stream, close = _open_out(out_path)
    try:
        if fmt == "json":
            doc = {"seed": seed, "trials": trials, "checks": results}
            json.dump(doc, stream, indent=1, sort_keys=True, default=str)
            stream.write("\n")
        else:
            for r in results:
                stream.write(
                    f"{r['status'].upper():<13} {r['check_id']:<28} "
                    f"{r['timing_ms']:>8} ms  {r['paper_ref']}\n"
                )
            counts = {"pass": 0, "fail": 0, "inconclusive": 0}
            for r in results:
                counts[r["status"]] += 1
            stream.write(
                f"\n{counts['pass']} passed, {counts['fail']} failed, "
                f"{counts['inconclusive']} inconclusive\n"
            )
    finally:
        if close:
            stream.close()
    return 1 if any(r["status"] == "fail" for r in results) else 0


def cmd_list_checks(args) -> int:
    for check in REGISTRY:
        print(f"{check.check_id:<28} {check.description}")
    return 0


def cmd_emit(args) -> int:
    out_path = args.out if args.out is not None else os.environ.get("G31_OUT")
    stream, close = _open_out(out_path)
    try:
        if args.what == "tau":
            stream.write(get_tau().to_json())
            stream.write("\n")
            return 0
        ctx = G31Context()
        if args.what == "generators":
            json.dump([m.to_json() for m in ctx.five_generators()], stream, indent=1)
            stream.write("\n")
        elif args.what == "reflections":
            json.dump([m.to_json() for m in ctx.reflections], stream, indent=1)
            stream.write("\n")
        else:  # group: 46080 matrices, streamed one per line inside the array
            g31 = ctx.g31
            stream.write("[\n")
            last = len(g31.elements) - 1
            for i, g in enumerate(g31.elements):
                stream.write(json.dumps(g.to_json()))
                stream.write(",\n" if i != last else "\n")
            stream.write("]\n")
    finally:
        if close:
            stream.close()
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "list-checks":
        return cmd_list_checks(args)
    if args.command == "emit":
        return cmd_emit(args)
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
