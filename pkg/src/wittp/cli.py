"""Command line interface for the verification harness.

Subcommands:
    verify   run identity sweeps and print pass/fail reports
    expand   expand a word over {D, F} into derivative monomials
    dtable   print the d(J) table for all partitions of a given size
    cvalue   compute the constant C(f) by three independent routes
    report   run the default suite and write CSV + JSON + figures

A config file named by the WITTP_CONFIG environment variable supplies
defaults in "key = value" form for seed, allow_large, max_prime, samples,
json, and out; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import diffword, harness
from .arith import DEFAULT_MAX_PRIME, Prime
from .errors import BoundExceededError
from .ring import ModulusVariant, TruncPoly, poly_from_text

CONFIG_ENV = "WITTP_CONFIG"
_CONFIG_KEYS = ("seed", "allow_large", "max_prime", "samples", "json", "out")


def _load_config() -> dict:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SystemExit(f"cannot read config file {path!r}: {exc}")
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SystemExit(f"{path}:{lineno}: expected 'key = value'")
        key, _, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if key not in _CONFIG_KEYS:
            raise SystemExit(f"{path}:{lineno}: unknown config key {key!r}")
        if key in ("seed", "max_prime", "samples"):
            values[key] = int(raw)
        elif key in ("allow_large", "json"):
            values[key] = raw.lower() in ("1", "true", "yes", "on")
        else:
            values[key] = raw
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittp",
        description="Exact verification of the restricted-structure identities "
        "of derivations of F_p[x]/(x^p - c).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity sweeps")
    verify.add_argument(
        "--theorem",
        choices=harness.THEOREM_IDS + ("all",),
        default="all",
        help="which sweep to run (default: all)",
    )
    verify.add_argument("--prime", type=int, default=None, help="single prime override")
    verify.add_argument("--modulus", choices=["xp", "xp1"], default=None)
    verify.add_argument("--json", action="store_true", default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--allow-large", action="store_true", default=None)
    verify.add_argument("--max-prime", type=int, default=None)
    verify.add_argument("--samples", type=int, default=None)

    expand = sub.add_parser("expand", help="expand a word over {D, F}")
    expand.add_argument("--word", required=True)
    expand.add_argument("--json", action="store_true", default=None)

    dtable = sub.add_parser("dtable", help="print the d(J) table")
    dtable.add_argument("--n", type=int, required=True, help="partition size")
    dtable.add_argument("--prime", type=int, default=None)
    dtable.add_argument("--json", action="store_true", default=None)

    cvalue = sub.add_parser("cvalue", help="compute C(f) three ways")
    cvalue.add_argument("--prime", type=int, required=True)
    cvalue.add_argument(
        "--poly", required=True, help="comma-separated coefficients, lowest degree first"
    )
    cvalue.add_argument("--modulus", choices=["xp", "xp1"], default="xp")
    cvalue.add_argument("--json", action="store_true", default=None)

    report = sub.add_parser("report", help="run the default suite, write CSV/JSON/figures")
    report.add_argument("--out", default=None, help="output directory (default: report)")
    report.add_argument("--seed", type=int, default=None)
    report.add_argument("--allow-large", action="store_true", default=None)
    report.add_argument("--no-figures", action="store_true")

    return parser


def _resolve(args, config, key, builtin):
    value = getattr(args, key, None)
    if value is not None:
        return value
    return config.get(key, builtin)


def _print_reports(reports, as_json: bool):
    if as_json:
        payload = [r.to_json_obj() for r in reports]
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        variant = r.variant or "both"
        line = (
            f"[{status}] {r.theorem:<17} p={r.prime:<3} modulus={variant:<4} "
            f"cases={r.cases_checked:<7} ({r.elapsed_ms} ms)"
        )
        print(line)
        if r.counterexample:
            print(f"         counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
        if r.notes:
            print(f"         notes: {json.dumps(r.notes, sort_keys=True)}")


def _cmd_verify(args, config) -> int:
    theorems = None if args.theorem == "all" else [args.theorem]
    variant = ModulusVariant.parse(args.modulus) if args.modulus else None
    try:
        reports = harness.run_suite(
            theorems,
            args.prime,
            variant=variant,
            seed=_resolve(args, config, "seed", 0),
            allow_large=bool(_resolve(args, config, "allow_large", False)),
            samples=_resolve(args, config, "samples", None),
            max_prime=_resolve(args, config, "max_prime", None),
        )
    except (BoundExceededError, ValueError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    _print_reports(reports, bool(_resolve(args, config, "json", False)))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_expand(args, config) -> int:
    try:
        expansion = diffword.expand_word(args.word)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if _resolve(args, config, "json", False):
        print(json.dumps({"word": args.word, "terms": expansion.to_json_obj()}, indent=2))
    else:
        print(expansion.format())
    return 0


def _cmd_dtable(args, config) -> int:
    prime = Prime(args.prime) if args.prime is not None else None
    rows = harness.d_table(args.n, prime)
    if _resolve(args, config, "json", False):
        print(json.dumps(rows, indent=2))
        return 0
    for row in rows:
        parts = "(" + ",".join(str(j) for j in row["diagram"]) + ")"
        line = f"J = {parts:<16} d(J) = {row['d']}"
        if prime is not None:
            line += f"  d(J) mod {prime.p} = {row['mod']}"
        print(line)
    return 0


def _cmd_cvalue(args, config) -> int:
    prime = Prime(args.prime)
    f = poly_from_text(args.poly, prime)
    if f.degree >= prime.p:
        print(f"error: polynomial degree {f.degree} is not below p={prime.p}", file=sys.stderr)
        return 2
    variant = ModulusVariant.parse(args.modulus)
    result = harness.run_cvalue(prime, TruncPoly.from_fppoly(f, variant))
    if _resolve(args, config, "json", False):
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        print(
            f"C(f) for f = {result['poly']} over F_{result['prime']}, "
            f"modulus {result['variant']}:"
        )
        print(f"  from the p-th power:        {result['c_power']}")
        print(f"  from the alternating chain: {result['c_b']}")
        print(f"  from the derivative power:  {result['c_c']}")
        print("  all three agree" if result["agree"] else "  DISAGREEMENT")
    return 0 if result["agree"] else 1


def _cmd_report(args, config) -> int:
    outdir = Path(_resolve(args, config, "out", "report"))
    outdir.mkdir(parents=True, exist_ok=True)
    try:
        reports = harness.run_suite(
            seed=_resolve(args, config, "seed", 0),
            allow_large=bool(_resolve(args, config, "allow_large", False)),
        )
    except (BoundExceededError, ValueError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2

    csv_path = outdir / "report.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theorem", "prime", "variant", "passed", "cases_checked", "elapsed_ms"])
        for r in reports:
            writer.writerow(
                [r.theorem, r.prime, r.variant or "both", r.passed, r.cases_checked, r.elapsed_ms]
            )

    json_path = outdir / "report.json"
    json_path.write_text(
        json.dumps([r.to_json_obj() for r in reports], indent=2, sort_keys=True) + "\n"
    )

    written = [csv_path, json_path]
    if not args.no_figures:
        from . import figures

        written += figures.render_report_figures(harness.figure_payload(), outdir)

    _print_reports(reports, as_json=False)
    print()
    for path in written:
        print(f"wrote {path}")
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _load_config()
    handler = {
        "verify": _cmd_verify,
        "expand": _cmd_expand,
        "dtable": _cmd_dtable,
        "cvalue": _cmd_cvalue,
        "report": _cmd_report,
    }[args.command]
    return handler(args, config)


if __name__ == "__main__":
    sys.exit(main())
