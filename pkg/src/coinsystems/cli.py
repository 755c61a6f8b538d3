"""Command-line front end.

Examples:
    coinsystems check 1,2,5,6
    coinsystems pattern 1,2,5,6,10
    coinsystems classify 1,4,7,18,21,35
    coinsystems family D --r 3 --a 3
    coinsystems enumerate --n 4 --max 20 --csv
    coinsystems conjecture --n 5,6 --max 25 --jobs 2

Records go to standard output, one JSON object per line, or CSV rows with a
fixed header under --csv; progress and diagnostics go to standard error.
Exit codes: 0 success, 1 conjecture violation, 2 usage error, 3 internal
disagreement between two verdict routes.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .canonicality import is_orderly, min_counterexample_oracle
from .characterize import classify6, orderly3, orderly4, orderly5, pattern
from .core import CoinSystem, Representation
from .families import FamilyParams, verify_target_pattern
from .search import (
    ConjectureFinding,
    EnumSpec,
    InternalDisagreementError,
    conjecture_scan,
    pattern_census,
    summarize_findings,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3

# fixed column order for per-system records
_COLUMNS = [
    "system",
    "orderly",
    "pattern",
    "min_counterexample",
    "greedy_count",
    "opt_count",
    "greedy_repr",
    "optimal_repr",
    "case_label",
    "family",
    "params",
]


def _parse_system(text: str) -> CoinSystem:
    try:
        values = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        return CoinSystem(values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_lengths(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(tok) for tok in text.split(",") if tok}))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fmt_counts(rep: Representation) -> str:
    return ",".join(str(x) for x in rep.counts)


def _fmt_params(params: dict | None) -> str | None:
    if not params:
        return None
    return ",".join(f"{k}={v}" for k, v in params.items())


class _Writer:
    """JSON-lines or fixed-header CSV on standard output."""

    def __init__(self, use_csv: bool, columns: Sequence[str]) -> None:
        self.use_csv = use_csv
        self.columns = list(columns)
        self._csv = csv.writer(sys.stdout) if use_csv else None
        if self._csv:
            self._csv.writerow(self.columns)

    def write(self, record: dict) -> None:
        if self._csv:
            row = []
            for col in self.columns:
                v = record.get(col)
                if v is None:
                    row.append("")
                elif isinstance(v, bool):
                    row.append("true" if v else "false")
                else:
                    row.append(v)
            self._csv.writerow(row)
        else:
            clean = {k: v for k, v in record.items() if v is not None}
            print(json.dumps(clean))


# ---------- subcommands ----------


def _cmd_check(args: argparse.Namespace) -> int:
    system: CoinSystem = args.system
    record: dict = {"system": ",".join(str(v) for v in system)}
    use_oracle = args.oracle or not args.pearson
    use_candidates = args.pearson or not args.oracle

    oracle_w = min_counterexample_oracle(system) if use_oracle else None
    report = is_orderly(system) if use_candidates else None

    if use_oracle and use_candidates:
        if report.orderly != (oracle_w is None):
            print(
                f"internal disagreement: candidate test says "
                f"{'orderly' if report.orderly else 'not orderly'}, oracle says "
                f"{'orderly' if oracle_w is None else f'counterexample {oracle_w}'}",
                file=sys.stderr,
            )
            return EXIT_DISAGREEMENT

    if report is not None:
        record["orderly"] = report.orderly
        if report.witness:
            w = report.witness
            record["min_counterexample"] = w.value
            record["greedy_count"] = w.greedy_count
            record["opt_count"] = w.opt_count
            record["greedy_repr"] = _fmt_counts(w.greedy)
            record["optimal_repr"] = _fmt_counts(w.optimal)
    else:
        record["orderly"] = oracle_w is None
        if oracle_w is not None:
            rep = is_orderly(system).witness
            record["min_counterexample"] = oracle_w
            record["greedy_count"] = rep.greedy_count
            record["opt_count"] = rep.opt_count
            record["greedy_repr"] = _fmt_counts(rep.greedy)
            record["optimal_repr"] = _fmt_counts(rep.optimal)

    _Writer(args.csv, _COLUMNS).write(record)
    return EXIT_OK


def _cmd_pattern(args: argparse.Namespace) -> int:
    system: CoinSystem = args.system
    marks = pattern(system).marks
    record = {
        "system": ",".join(str(v) for v in system),
        "orderly": marks[-1] == "+",
        "pattern": marks,
    }
    _Writer(args.csv, _COLUMNS).write(record)
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    system: CoinSystem = args.system
    n = len(system)
    record: dict = {"system": ",".join(str(v) for v in system)}
    if n == 3:
        record["orderly"] = orderly3(system[1], system[2])
    elif n == 4:
        record["orderly"] = orderly4(system)
    elif n == 5:
        record["orderly"] = orderly5(system)
    elif n == 6:
        verdict = classify6(system)
        record["orderly"] = verdict.orderly
        record["case_label"] = verdict.case_label
        record["params"] = _fmt_params(verdict.params)
    else:
        raise argparse.ArgumentTypeError("classify handles 3 to 6 coin values")
    _Writer(args.csv, _COLUMNS).write(record)
    return EXIT_OK


def _cmd_family(args: argparse.Namespace) -> int:
    try:
        if args.family == "D":
            if args.m is not None:
                raise ValueError("family D takes no --m")
            params = FamilyParams(family="D", r=args.r, a=args.a)
        else:
            if args.m is None:
                raise ValueError(f"family {args.family} needs --m")
            params = FamilyParams(family=args.family, r=args.r, a=args.a, m=args.m)
        system = params.generate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    marks = pattern(system).marks
    if not verify_target_pattern(system):
        print(
            f"internal disagreement: generated {system} has pattern {marks}, "
            "expected (+++-...-+)",
            file=sys.stderr,
        )
        return EXIT_DISAGREEMENT
    record = {
        "system": ",".join(str(v) for v in system),
        "orderly": True,
        "pattern": marks,
        "family": args.family,
        "params": _fmt_params(
            {"r": args.r, "a": args.a}
            if args.m is None
            else {"r": args.r, "a": args.a, "m": args.m}
        ),
    }
    _Writer(args.csv, _COLUMNS).write(record)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    spec = EnumSpec(n=args.n, max_cn=args.max)
    census = pattern_census(spec, jobs=args.jobs, sample_rate=args.sample)
    writer = _Writer(args.csv, ["pattern", "count"])
    for marks, count in census.items():
        writer.write({"pattern": marks, "count": count})
    return EXIT_OK


def _finding_record(finding: ConjectureFinding) -> dict:
    membership = finding.membership
    record = {
        "system": ",".join(str(v) for v in finding.system),
        "orderly": True,
        "pattern": "+++" + "-" * (len(finding.system) - 4) + "+",
    }
    if membership is not None:
        record["family"] = membership.family
        params = {"r": membership.r, "a": membership.a}
        if membership.m is not None:
            params["m"] = membership.m
        record["params"] = _fmt_params(params)
    return record


def _cmd_conjecture(args: argparse.Namespace) -> int:
    findings = conjecture_scan(
        args.lengths, args.max, jobs=args.jobs, sample_rate=args.sample
    )
    summary = summarize_findings(findings)
    writer = _Writer(args.csv, _COLUMNS)
    for finding in findings:
        writer.write(_finding_record(finding))
    summary_record = {
        "findings": summary.total,
        "without_membership": len(summary.without_membership),
        "forbidden_length": len(summary.forbidden_length),
    }
    if args.csv:
        print(
            "summary: "
            + " ".join(f"{k}={v}" for k, v in summary_record.items()),
            file=sys.stderr,
        )
    else:
        print(json.dumps({"summary": summary_record}))
    return EXIT_OK if summary.ok else EXIT_VIOLATION


# ---------- parser ----------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinsystems",
        description="Orderliness tools for coin systems under greedy change-making.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--csv", action="store_true", help="CSV output instead of JSON lines")

    p_check = sub.add_parser("check", help="orderliness verdict with witness")
    p_check.add_argument("system", type=_parse_system, help="comma-separated values, e.g. 1,2,5,6")
    p_check.add_argument("--oracle", action="store_true", help="use only the brute-force scan")
    p_check.add_argument("--pearson", action="store_true", help="use only the candidate test")
    add_output_flags(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_pattern = sub.add_parser("pattern", help="orderliness mark for every prefix")
    p_pattern.add_argument("system", type=_parse_system)
    add_output_flags(p_pattern)
    p_pattern.set_defaults(func=_cmd_pattern)

    p_classify = sub.add_parser("classify", help="closed-form verdict for 3 to 6 values")
    p_classify.add_argument("system", type=_parse_system)
    add_output_flags(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_family = sub.add_parser("family", help="generate a family member and verify its pattern")
    p_family.add_argument("family", choices=["D", "E", "F"])
    p_family.add_argument("--r", type=int, required=True)
    p_family.add_argument("--a", type=int, required=True)
    p_family.add_argument("--m", type=int, default=None)
    add_output_flags(p_family)
    p_family.set_defaults(func=_cmd_family)

    p_enum = sub.add_parser("enumerate", help="pattern census over an enumeration")
    p_enum.add_argument("--n", type=int, required=True, help="number of coin values")
    p_enum.add_argument("--max", type=int, required=True, help="largest allowed coin")
    p_enum.add_argument("--jobs", type=int, default=1)
    p_enum.add_argument("--sample", type=float, default=0.01, help="oracle spot-check rate")
    add_output_flags(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_conj = sub.add_parser("conjecture", help="scan for pattern (+++-...-+) systems")
    p_conj.add_argument(
        "--n", dest="lengths", type=_parse_lengths, required=True,
        help="comma-separated lengths, e.g. 5,6,7",
    )
    p_conj.add_argument("--max", type=int, required=True, help="largest allowed coin")
    p_conj.add_argument("--jobs", type=int, default=1)
    p_conj.add_argument("--sample", type=float, default=0.01, help="oracle spot-check rate")
    add_output_flags(p_conj)
    p_conj.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalDisagreementError as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))  # exits with status 2
        return EXIT_USAGE  # pragma: no cover


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
