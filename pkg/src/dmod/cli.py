"""Command line front end: ``dmod report|verify|explain|sweep``.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass

from .action import verify_annihilators
from .arrangement import ArrangementError, integer_count, load_arrangement, normalize_beta, normalize_coordinates
from .certs import PreconditionError, lemma44_reduce, lemma45_quotient_class, lemma43_simplify
from .decomp import closed_form_count, count_factors, normal_crossings_count
from .sampling import generic_arrangement
from .scalar import ScalarParseError, parse_scalar
from .suites import run_suites
from .weyl import build_annihilators

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    mode: str
    input_path: str | None = None
    seed: int = 0
    output_format: str = "text"


def _load(path, err=None):
    try:
        return load_arrangement(path)
    except (ArrangementError, ScalarParseError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err or sys.stderr)
        return None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_report(config: RunConfig, out=None, err=None) -> int:
    arr = _load(config.input_path, err)
    if arr is None:
        return EXIT_INPUT
    rep = count_factors(arr)
    print(_dump(rep.to_json()) if config.output_format == "json" else rep.render(), file=out)
    return EXIT_OK


def explain_lines(arr) -> list[str]:
    """Human-readable trace from the input arrangement to the factor count."""
    lines = [f"input: {arr.m} forms " + ", ".join(str(f) for f in arr.forms)]
    lines.append("beta = (" + ", ".join(map(str, arr.beta)) + ")")
    norm = normalize_beta(arr)
    lines.append("beta mod Z^m = (" + ", ".join(map(str, norm.beta)) + ")")
    k, idx = integer_count(arr)
    lines.append(f"integer exponents: k={k} at {idx}; sum = {arr.beta_sum} "
                 f"({'integer' if arr.beta_sum.is_integer() else 'non-integer'})")
    if arr.m >= 2:
        na = normalize_coordinates(norm)
        lines.append("normalized forms: " + ", ".join(str(f) for f in na.forms()))
        ann = build_annihilators(na)
        check = verify_annihilators(ann, na)
        lines.append(f"P = {ann.P}")
        lines.append(f"Q = {ann.Q}")
        lines.append(f"P alpha^beta = 0 and Q alpha^beta = 0: {check.ok}")
        try:
            simp = lemma43_simplify(ann, norm.beta)
            lines.append("ideal simplification (A2 x + A2 P + A2 Q):")
            lines += ["  " + s for s in simp.render()]
        except PreconditionError as exc:
            lines.append(f"ideal simplification skipped: {exc}")
        gamma = ann.beta_sum + 1
        chain = lemma44_reduce(gamma, arr.m - 2)
        lines.append(f"A1 reduction with gamma = |beta|+1 = {gamma}, k = m-2 = {arr.m - 2}:")
        lines += ["  " + s for s in chain.render()]
        lines.append(f"quotient A2/(A2 x + A2 P + A2 Q): {lemma45_quotient_class(ann.beta_sum, arr.m).value}")
    else:
        lines.append(f"single line: normal crossings, c = 2^k = {normal_crossings_count(k, 1, 2)}")
    return lines


def cmd_explain(config: RunConfig, out=None, err=None) -> int:
    arr = _load(config.input_path, err)
    if arr is None:
        return EXIT_INPUT
    for line in explain_lines(arr):
        print(line, file=out)
    print("", file=out)
    print(count_factors(arr).render(), file=out)
    return EXIT_OK


def cmd_verify(config: RunConfig, suites=None, corrupt_q: bool = False, out=None) -> int:
    print(f"seed: {config.seed}", file=out)
    results = run_suites(config.seed, suites, corrupt_q=corrupt_q)
    if config.output_format == "json":
        print(_dump([{"suite": r.name, "passed": r.passed, "checked": r.checked, "witness": r.witness} for r in results]), file=out)
    else:
        for r in results:
            print(r.line(), file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def sweep_rows(m_max: int, grid) -> list[dict]:
    rows: dict[tuple, dict] = {}
    for m in range(1, m_max + 1):
        for beta in itertools.combinations_with_replacement(grid, m):
            rep = count_factors(generic_arrangement(beta))
            sum_int = sum(beta, parse_scalar("0")).is_integer()
            key = (m, rep.k, sum_int)
            expect = closed_form_count(m, rep.k, sum_int)
            ok = rep.count == expect
            if m <= 2:
                ok = ok and rep.count == normal_crossings_count(rep.k, m, 2)
            row = rows.setdefault(key, {"m": m, "k": rep.k, "sum_integer": sum_int, "count": rep.count,
                                        "expected": expect, "ok": True, "samples": 0})
            row["ok"] = row["ok"] and ok and row["count"] == rep.count
            row["samples"] += 1
    return [rows[k] for k in sorted(rows)]


def cmd_sweep(config: RunConfig, m_max: int, grid, out=None) -> int:
    rows = sweep_rows(m_max, grid)
    if config.output_format == "json":
        print(_dump(rows), file=out)
    else:
        print(f"{'m':>2} {'k':>2} {'sum in Z':>8} {'count':>5} {'formula':>7}  ok", file=out)
        for r in rows:
            print(f"{r['m']:>2} {r['k']:>2} {str(r['sum_integer']):>8} {r['count']:>5} {r['expected']:>7}  "
                  f"{'yes' if r['ok'] else 'NO'}", file=out)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dmod", description="Decomposition factors of twisted plane arrangement modules")
    sub = parser.add_subparsers(dest="mode", required=True)

    p = sub.add_parser("report", help="count and describe decomposition factors")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("explain", help="report with the certificate trace")
    p.add_argument("file")

    p = sub.add_parser("verify", help="run the seeded verification suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--corrupt-q", action="store_true", help="perturb Q to check that failures are caught")

    p = sub.add_parser("sweep", help="tabulate counts over a grid of exponents")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--grid", default="0,1/2", help="comma separated scalars")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = "json" if getattr(args, "json", False) else "text"
    if args.mode == "report":
        return cmd_report(RunConfig("report", args.file, output_format=fmt))
    if args.mode == "explain":
        return cmd_explain(RunConfig("explain", args.file))
    if args.mode == "verify":
        from .suites import SUITES

        unknown = set(args.suite or ()) - set(SUITES)
        if unknown:
            print(f"error: unknown suite(s) {sorted(unknown)}; choose from {list(SUITES)}", file=sys.stderr)
            return EXIT_INPUT
        return cmd_verify(RunConfig("verify", seed=args.seed, output_format=fmt), args.suite, args.corrupt_q)
    if args.m_max > 8:
        print("error: --m-max is limited to 8", file=sys.stderr)
        return EXIT_INPUT
    try:
        grid = [parse_scalar(s.strip()) for s in args.grid.split(",") if s.strip()]
    except ScalarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return cmd_sweep(RunConfig("sweep", output_format=fmt), args.m_max, grid)


if __name__ == "__main__":
    sys.exit(main())
