"""Command-line entry point: run verification suites, sweep the lp
exponent, and display saved reports.

Exit codes: 0 on success, 1 when any check fails, 2 on usage errors.
The environment variable POLARCALC_SEED overrides --seed when set.
Given the same configuration and seed, output files are byte-identical
across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import harness
from .geometry import exponent_from_json
from .volume import gamma_ratio


def _parse_p_list(text):
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty p list")
    return [exponent_from_json(t.strip()) for t in tokens]


def _parse_dims(text):
    dims = [int(t) for t in text.split(",") if t.strip()]
    if not dims or any(d not in (1, 2, 3, 4) for d in dims):
        raise ValueError("dims must be a comma list drawn from 1,2,3,4")
    return dims


def _resolve_seed(args):
    env = os.environ.get("POLARCALC_SEED")
    return int(env) if env else args.seed


def _report_lines(reports):
    return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in reports)


def _summary_csv(rows):
    header = "check_id,n,p,trials,pass,fail,inconclusive,min_ratio,max_ratio\n"
    lines = [header]
    for row in rows:
        mn = "" if row["min_ratio"] is None else repr(row["min_ratio"])
        mx = "" if row["max_ratio"] is None else repr(row["max_ratio"])
        lines.append(f'{row["check_id"]},{row["n"]},{row["p"]},{row["trials"]},'
                     f'{row["pass"]},{row["fail"]},{row["inconclusive"]},{mn},{mx}\n')
    return "".join(lines)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    seed = _resolve_seed(args)
    reports = harness.run_suite(args.suite, dims=args.dims, ps=args.p,
                                trials=args.trials, mc_samples=args.mc_samples,
                                seed=seed)
    rows = harness.summarize(reports)
    if args.format == "json":
        _write(args.output, _report_lines(reports))
    else:
        _write(args.output, _summary_csv(rows))
    if args.summary:
        _write(args.summary, _summary_csv(rows))
    n_fail = sum(1 for r in reports if r.verdict == "fail")
    n_pass = sum(1 for r in reports if r.verdict == "pass")
    n_inc = len(reports) - n_fail - n_pass
    print(f"suite={args.suite} checks={len(reports)} pass={n_pass} "
          f"fail={n_fail} inconclusive={n_inc}", file=sys.stderr)
    return 1 if n_fail else 0


def cmd_sweep(args) -> int:
    """Emit (p, n, check_id, min_ratio, bound) rows over the exponent
    grid on symmetric L = K instances; the bound column is the
    theoretical Gamma-ratio constant, monotone in p."""
    seed = _resolve_seed(args)
    lines = ["p\tn\tcheck_id\tmin_ratio\tbound\n"]
    violations = 0
    for n in args.dims:
        K = harness.InstanceGenerator("symmetric_body", n, n + 5, seed).build()
        for p in args.p:
            if args.check == "rspolar":
                report = harness.check_rspolar(K, K, p, args.mc_samples, seed)
                bound = gamma_ratio(n, p)
            else:
                report = harness.check_rspolar_reverse(K, K, p, args.mc_samples, seed)
                bound = math.comb(2 * n, n) * gamma_ratio(n, p)
            if report.verdict == "fail":
                violations += 1
            p_str = "inf" if p == math.inf else repr(float(p))
            lines.append(f"{p_str}\t{n}\t{report.check_id}\t"
                         f"{report.ratio!r}\t{bound!r}\n")
    _write(args.output, "".join(lines))
    return 1 if violations else 0


def cmd_show(args) -> int:
    with open(args.report) as fh:
        reports = [json.loads(line) for line in fh if line.strip()]
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for r in reports:
        counts[r["verdict"]] += 1
        flag = {"pass": "ok", "fail": "FAIL", "inconclusive": "??"}[r["verdict"]]
        ratio = r["ratio"]
        ratio_str = "n/a" if ratio is None else f"{ratio:.6g}"
        print(f'[{flag:>4}] {r["check_id"]:<28} n={r["n"]} p={r["p"]} '
              f'ratio={ratio_str}')
    print(f'total={len(reports)} pass={counts["pass"]} fail={counts["fail"]} '
          f'inconclusive={counts["inconclusive"]}')
    return 1 if counts["fail"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarcalc",
        description="verify polar-volume and log-concave inequalities numerically")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", dest="dims", type=_parse_dims, default=[2],
                        help="comma list of ambient dimensions (1..4)")
    common.add_argument("--p", type=_parse_p_list, default=[1.0, 2.0, math.inf],
                        help="comma list of lp exponents; 'inf' is the symbolic limit")
    common.add_argument("--trials", type=int, default=3,
                        help="instances per (suite part, dimension)")
    common.add_argument("--mc-samples", type=int, default=100_000,
                        help="Monte Carlo samples per volume (>= 1000)")
    common.add_argument("--seed", type=int, default=0,
                        help="master seed (POLARCALC_SEED overrides)")
    common.add_argument("--output", default="-",
                        help="output path ('-' for stdout)")

    pv = sub.add_parser("verify", parents=[common],
                        help="run a named suite and report verdicts")
    pv.add_argument("--suite", default="all",
                    help=f"one of {', '.join(harness.SUITE_NAMES)}")
    pv.add_argument("--format", choices=("json", "csv"), default="json",
                    help="main output: JSON-lines reports or summary CSV")
    pv.add_argument("--summary", default=None,
                    help="also write the summary CSV to this path")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("sweep", parents=[common],
                        help="tabulate observed ratio vs bound over the p grid")
    ps.add_argument("--check", choices=("rspolar", "rspolar_reverse"),
                    default="rspolar")
    ps.set_defaults(func=cmd_sweep)

    pw = sub.add_parser("show", help="pretty-print a saved JSONL report")
    pw.add_argument("report")
    pw.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if getattr(args, "trials", 1) < 1:
            raise ValueError("trials must be >= 1")
        if getattr(args, "mc_samples", 1000) < 1000:
            raise ValueError("mc-samples must be >= 1000")
        if getattr(args, "suite", None) is not None \
                and args.suite not in harness.SUITE_NAMES:
            raise ValueError(f"unknown suite {args.suite!r}")
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
