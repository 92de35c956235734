"""Command-line frontend.

Subcommands: expand, c0, survey, gap, theta, minima, verify.  Human-readable
output by default, machine output (JSON / JSON-lines) with --json.  Exit
codes: 0 when every assertable verdict passed (EXPERIMENTAL and RECORDED
records never fail a run), 1 on any FAIL, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from qgap import congruence, siegel
from qgap.congruence import (
    FAILING,
    desk_rules_config,
    full_rules_config,
    render_table,
    run_survey,
)
from qgap.exprs import ParseError, parse_expr
from qgap.forms import eval_expr, identity_checks
from qgap.quadratic import load_gram, min_represented, theta, verify_theorem51
from qgap.series import ReachError

__all__ = ["main"]

DESK_SEC33 = 512
FULL_SEC33_DELTA = 2470
FULL_SEC33_RECIPROCAL = 4096


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QGAP_JOBS", "1")))
    except ValueError:
        return 1


def _cmd_expand(args) -> int:
    series = eval_expr(args.expr, args.prec)
    coeffs = series.coefficients(args.prec)
    if args.json:
        print(json.dumps({
            "expr": args.expr,
            "valuation": series.valuation,
            "coefficients": [_fmt(c) for c in coeffs],
        }))
    else:
        print(f"val {series.valuation}: [{', '.join(_fmt(c) for c in coeffs)}]")
    return 0


def _cmd_c0(args) -> int:
    expr = parse_expr(args.expr)
    c0 = eval_expr(expr, max(1, expr.pole_order + 1)).coeff(0)
    if args.json:
        print(json.dumps({"expr": args.expr, "c0": _fmt(c0)}))
    else:
        print(_fmt(c0))
    return 0


def _cmd_survey(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        try:
            config = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{args.config}:{exc.lineno}: {exc.msg}") from None
    report = run_survey(config, jobs=args.jobs)
    if args.json:
        for rec in report.records:
            print(json.dumps(rec.to_dict()))
        print(json.dumps({"summary": report.summary, "config": config.get("name"),
                          "timestamp": report.timestamp}))
    else:
        print(render_table(report))
    return 1 if report.failed else 0


def _cmd_gap(args) -> int:
    out = siegel.run_gap_suite(level=args.level, hmax=args.hmax,
                               combos=args.combos, seed=args.seed)
    failed = [r for r in out["records"] if r.verdict == "FAIL"]
    if args.json:
        for rec in out["records"]:
            print(json.dumps(rec.to_dict()))
        print(json.dumps({"level": out["level"], "hmax": out["hmax"],
                          "seed": out["seed"],
                          "total": len(out["records"]),
                          "failed": len(failed)}))
    else:
        for rec in out["records"]:
            extra = ""
            if rec.conjectured_bound is not None:
                mark = "<=" if rec.within_conjectured else ">"
                extra = (f"  [experimental: first {mark} conjectured bound "
                         f"{rec.conjectured_bound}]")
            print(f"{rec.form_id}: first={rec.first_nonzero_index} "
                  f"bound={rec.bound} {rec.verdict}{extra}")
        print(f"seed={out['seed']} total={len(out['records'])} "
              f"failed={len(failed)}")
    return 1 if failed else 0


def _cmd_theta(args) -> int:
    gram = load_gram(args.gram)
    if gram.rank > args.max_rank:
        raise ValueError(
            f"rank {gram.rank} exceeds the cap {args.max_rank}; "
            "raise it with --max-rank"
        )
    counts = theta(gram, args.terms)
    if args.json:
        print(json.dumps({"gram": str(args.gram), "rank": gram.rank,
                          "counts": counts}))
    else:
        for n, c in enumerate(counts):
            print(f"{n}\t{c}")
    return 0


def _cmd_minima(args) -> int:
    gram = load_gram(args.gram)
    v = gram.rank
    try:
        rec = verify_theorem51(gram)
        line = f"min={rec['min']} bound={rec['bound']} {rec['verdict']}"
        code = 0 if rec["verdict"] == "PASS" else 1
        payload = rec
    except ValueError:
        m = min_represented(gram)
        line = f"min={m} bound=n/a NOT_APPLICABLE"
        code = 0
        payload = {"rank": v, "min": m, "bound": None,
                   "verdict": "NOT_APPLICABLE"}
    print(json.dumps(payload) if args.json else line)
    return code


def _suite_identities(full: bool, jobs: int):
    checks = identity_checks(200)
    lines = [f"identity {name}: {'PASS' if ok else 'FAIL'}" for name, ok in checks]
    ok = all(flag for _, flag in checks)
    return ok, lines, [{"check": n, "verdict": "PASS" if f else "FAIL"}
                       for n, f in checks]


def _suite_satz(full: bool, jobs: int):
    out = siegel.run_satz_suite()
    records = []
    ok = True
    for rec in out["vanishing"]:
        records.append({"check": f"vanishing {rec['form']}",
                        "verdict": rec["verdict"]})
        ok &= rec["verdict"] == "PASS"
    for rec in out["signs"]:
        records.append({"check": f"sign c0[T2({rec['weight']})]",
                        "verdict": rec["verdict"]})
        ok &= rec["verdict"] == "PASS"
    for rec in out["experimental"]:
        records.append({
            "check": f"c0[T2({rec['weight']})] nonzero (h=2 mod 4)",
            "verdict": "EXPERIMENTAL",
            "observed_nonzero": rec["nonzero"],
        })
    lines = [
        f"vanishing checks: {sum(r['verdict'] == 'PASS' for r in out['vanishing'])}"
        f"/{len(out['vanishing'])} pass",
        f"sign checks: {sum(r['verdict'] == 'PASS' for r in out['signs'])}"
        f"/{len(out['signs'])} pass",
        f"experimental nonvanishing records (h=2 mod 4): {len(out['experimental'])}",
    ]
    return ok, lines, records


def _suite_theorems4(full: bool, jobs: int):
    records = siegel.theorem4_checks()
    ok = all(r["verdict"] == "PASS" for r in records)
    lines = [f"{r['theorem']} {r['instance']}: {r['verdict']}" for r in records]
    return ok, lines, records


def _suite_rules(full: bool, jobs: int):
    config = full_rules_config() if full else desk_rules_config()
    if full:
        print("warning: --full survey ranges take a long time", file=sys.stderr)
    report = run_survey(config, jobs=jobs)
    ok = not report.failed
    lines = [render_table(report).splitlines()[-1]]
    for rec in report.failed[:20]:
        lines.append(f"FAIL: {rec.expr} {rec.to_dict()['rules']}")
    records = [{"summary": report.summary, "config": config["name"]}]
    return ok, lines, records


def _suite_sec33(full: bool, jobs: int):
    n_delta = FULL_SEC33_DELTA if full else DESK_SEC33
    n_recip = FULL_SEC33_RECIPROCAL if full else DESK_SEC33
    if full:
        print(f"warning: --full recomputes expansions to {n_recip} terms; "
              "expect a long run", file=sys.stderr)
    records = []
    ok = True
    for p in (2, 3, 5):
        rows = congruence.delta_pn_compare(p, n_delta)
        bad = [r for r in rows if r["verdict"] == "FAIL"]
        exceptions = [r for r in rows if r["verdict"] == "EXCEPTION"]
        ok &= not bad
        records.append({"table": f"delta_{p}n", "n_max": n_delta,
                        "rows": len(rows), "failed": len(bad),
                        "exceptions": [r["n"] for r in exceptions]})
    rows = congruence.reciprocal_compare(n_recip)
    bad = [r for r in rows if r["verdict"] == "FAIL"]
    ok &= not bad
    records.append({"table": "reciprocal", "n_max": n_recip,
                    "rows": len(rows), "failed": len(bad)})
    rows = congruence.lehner_check(n_recip)
    bad = [r for r in rows if r["verdict"] == "FAIL"]
    ok &= not bad
    records.append({"table": "lehner", "n_max": n_recip,
                    "rows": len(rows), "failed": len(bad)})
    lines = [
        f"{r['table']} (n<={r['n_max']}): {r['rows']} rows, "
        f"{r['failed']} failed"
        + (f", exceptions at {r['exceptions']}" if r.get("exceptions") else "")
        for r in records
    ]
    return ok, lines, records


_SUITES = {
    "identities": _suite_identities,
    "satz": _suite_satz,
    "theorems4": _suite_theorems4,
    "rules": _suite_rules,
    "sec33": _suite_sec33,
}


def _cmd_verify(args) -> int:
    ok, lines, records = _SUITES[args.suite](args.full, args.jobs)
    if args.json:
        for rec in records:
            print(json.dumps(rec))
        print(json.dumps({"suite": args.suite,
                          "verdict": "PASS" if ok else "FAIL"}))
    else:
        for line in lines:
            print(line)
        print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgap",
        description="Exact q-expansions, constant-term congruence surveys, "
                    "gap checks, and lattice theta series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the expansion of an expression")
    p.add_argument("expr")
    p.add_argument("--prec", type=int, default=10,
                   help="number of coefficients from the valuation")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("c0", help="print the exact constant term")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_c0)

    p = sub.add_parser("survey", help="run a survey config (JSON)")
    p.add_argument("config")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", action="store_true",
                   help="JSON-lines records instead of a table")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("gap", help="gap bounds over bases plus random combinations")
    p.add_argument("--level", type=int, choices=(1, 2), default=2)
    p.add_argument("--hmax", type=int, default=40)
    p.add_argument("--combos", type=int, default=20)
    p.add_argument("--seed", type=int, default=siegel.DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gap)

    p = sub.add_parser("theta", help="theta series of a Gram matrix file")
    p.add_argument("gram")
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--max-rank", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("minima", help="minimum represented value and its bound")
    p.add_argument("gram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_minima)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--full", action="store_true",
                   help="paper-scale ranges instead of desk defaults")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ReachError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
