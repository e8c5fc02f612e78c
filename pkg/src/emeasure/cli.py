"""Command-line interface.

Subcommands: kempner, interval, distance, measure, convergents,
partial-sums, cantor, density, verify-paper. All JSON output renders big
integers and rationals as decimal strings so results survive 64-bit
consumers. Exit codes: 0 success, 1 domain error (bad input), 2 resource
error (sieve budget, enclosure depth cap).
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import os
import sys
from fractions import Fraction

from . import cantor, cfrac, density, enclosure, kempner, measures, verify
from .rationals import parse_rational, to_json

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_RESOURCE = 2


def _depth_cap_default() -> int:
    return int(os.environ.get("EMEASURE_DEPTH_CAP", enclosure.DEFAULT_DEPTH_CAP))


def _workers_default() -> int:
    return int(os.environ.get("EMEASURE_WORKERS", "1"))


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- subcommands


def cmd_kempner(args) -> int:
    if args.q is None and not args.oracle_check:
        raise ValueError("kempner requires --q or --oracle-check")
    if args.oracle_check:
        mismatches = [
            q
            for q in range(1, args.max + 1)
            if kempner.kempner_S(q) != kempner.kempner_S_naive(q)
        ]
        _emit_json(
            {"checked_max": args.max, "mismatches": [str(q) for q in mismatches]}
        )
        return EXIT_OK if not mismatches else EXIT_DOMAIN
    result = kempner.kempner_result(args.q)
    _emit_json(
        {
            "q": str(result.q),
            "S": str(result.s),
            "P": str(result.p),
            "factorization": [[str(p), e] for p, e in result.factorization],
        }
    )
    return EXIT_OK


def cmd_interval(args) -> int:
    box = enclosure.interval(args.n)
    _emit_json({"n": args.n, "left": to_json(box.left), "right": to_json(box.right)})
    return EXIT_OK


def cmd_distance(args) -> int:
    r = Fraction(args.p, args.q)
    cap = args.depth_cap if args.depth_cap is not None else _depth_cap_default()
    out = {
        "r": _frac_str(r),
        "digits": enclosure.render_distance(r, args.digits, depth_cap=cap),
        "bounds": [],
    }
    for text in args.bound or []:
        bound = parse_rational(text)
        out["bounds"].append(
            {
                "bound": _frac_str(bound),
                "distance_is": enclosure.compare_distance_to_e(r, bound, depth_cap=cap),
            }
        )
    _emit_json(out)
    return EXIT_OK


def _verdict_json(v: measures.MeasureVerdict) -> dict:
    return {
        "p": str(v.p),
        "q": str(v.q),
        "bound_name": v.bound_name,
        "bound": to_json(v.bound),
        "holds": v.holds,
        "margin_digits": v.margin_digits,
    }


def cmd_measure(args) -> int:
    eps = parse_rational(args.eps)
    if args.corollary2 is not None:
        scan = measures.corollary2_scan(args.corollary2)
        scan["witness"] = (
            [str(scan["witness"][0]), str(scan["witness"][1])]
            if scan["witness"]
            else None
        )
        _emit_json(scan)
        return EXIT_OK
    if args.compare:
        if args.q is None:
            raise ValueError("--compare requires --q")
        result = measures.compare_bounds(args.q, eps)
        result["eps"] = _frac_str(eps)
        _emit_json(result)
        return EXIT_OK
    if args.p is None or args.q is None:
        raise ValueError("measure requires --p and --q")
    if args.bound == "theorem1":
        verdict = measures.check_theorem1(args.p, args.q)
    elif args.bound == "prime-factor":
        verdict = measures.check_prime_factor_bound(args.p, args.q)
    elif args.bound == "weak-prime":
        verdict = measures.check_weak_prime(args.p, args.q)
    else:  # known
        verdict = measures.check_known(args.p, args.q, eps)
    _emit_json(_verdict_json(verdict))
    return EXIT_OK


def cmd_convergents(args) -> int:
    rows = [
        {"index": c.index, "value": to_json(c.value)}
        for c in cfrac.convergents(args.count)
    ]
    _emit_json(rows)
    return EXIT_OK


def cmd_partial_sums(args) -> int:
    writer = csv.writer(sys.stdout)
    header = ["n", "s_n_num", "s_n_den", "q_n", "full_factorial"]
    if args.check_convergent:
        header.append("is_convergent")
    writer.writerow(header)
    for n in range(0, args.max_n + 1):
        record = cfrac.partial_sum_record(n)
        row = [
            n,
            record.s_n.numerator,
            record.s_n.denominator,
            record.q_n,
            int(record.full_factorial),
        ]
        if args.check_convergent:
            row.append(int(cfrac.is_convergent(record.s_n)))
        writer.writerow(row)
    return EXIT_OK


def _spec_from_args(args) -> cantor.CantorSpec:
    if args.spec_json:
        with open(args.spec_json) as handle:
            doc = json.load(handle)
        return cantor.CantorSpec(
            a0=doc.get("a0", 0),
            family="custom",
            a_table=tuple(doc["a_table"]),
            b_table=tuple(doc["b_table"]),
            tail_mode=doc.get("tail_mode", "repeat-last-block"),
            all_primes_divide_infinitely_many_b=doc.get(
                "all_primes_divide_infinitely_many_b"
            ),
            a_positive_infinitely_often=doc.get("a_positive_infinitely_often"),
            a_below_b_minus_1_infinitely_often=doc.get(
                "a_below_b_minus_1_infinitely_often"
            ),
        )
    family = args.family
    if family.startswith("mask:"):
        mask = tuple(int(ch) for ch in family.removeprefix("mask:"))
        return cantor.masked_unit_family(mask, a0=args.a0)
    if family == "unit":
        return cantor.unit_family(a0=args.a0)
    if family == "complement":
        return cantor.complement_family(a0=args.a0)
    raise ValueError(f"unknown family {family!r}")


def cmd_cantor(args) -> int:
    spec = _spec_from_args(args)
    out: dict = {"family": spec.family, "a0": spec.a0}
    out["partial_sum"] = to_json(cantor.cantor_partial_sum(spec, args.N))
    out["N"] = args.N
    if args.classify:
        verdict = cantor.classify(spec)
        out["classification"] = verdict.classification
        out["rational_value"] = (
            to_json(verdict.rational_value)
            if verdict.rational_value is not None
            else None
        )
        out["conditions_used"] = verdict.conditions_used
    _emit_json(out)
    return EXIT_OK


def cmd_density(args) -> int:
    report = density.density_report(
        args.x, workers=args.workers, csv_path=args.csv
    )
    _emit_json(
        {
            "x": str(report.x),
            "count_S_neq_P": str(report.count_S_neq_P),
            "count_conjecture1_fail": str(report.count_conjecture1_fail),
            "count_conjecture1_fail_P": str(report.count_conjecture1_fail_P),
            "ratio_S_neq_P": report.ratio_S_neq_P,
            "ratio_conjecture1_fail": report.ratio_conjecture1_fail,
            "exceptions_S_neq_P": [str(q) for q in report.exceptions_S_neq_P],
            "exceptions_conjecture1": [str(q) for q in report.exceptions_conjecture1],
        }
    )
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = verify.run_all()
    out = {
        "checks": [
            {
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "seconds": round(r.seconds, 3),
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    if not args.no_timestamp:
        out["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.name} ({r.seconds:.2f}s)", file=sys.stderr)
    _emit_json(out)
    return EXIT_OK if out["all_passed"] else EXIT_DOMAIN


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emeasure",
        description="Exact-arithmetic toolkit for irrationality measures of e.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kempner", help="S(q), P(q), and the factorization of q")
    p.add_argument("--q", type=int)
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--max", type=int, default=10_000)
    p.set_defaults(fn=cmd_kempner)

    p = sub.add_parser("interval", help="nth interval of the nested construction")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_interval)

    p = sub.add_parser("distance", help="truncated decimal of |e - p/q|")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--digits", type=int, default=5)
    p.add_argument("--bound", action="append", metavar="P/Q")
    p.add_argument("--depth-cap", type=int, default=None)
    p.set_defaults(fn=cmd_distance)

    p = sub.add_parser("measure", help="irrationality-measure verdicts")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument(
        "--bound",
        choices=["theorem1", "prime-factor", "weak-prime", "known"],
        default="theorem1",
    )
    p.add_argument("--eps", default="0")
    p.add_argument("--corollary2", type=int, metavar="N")
    p.add_argument("--compare", action="store_true")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("convergents", help="continued-fraction convergents of e")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(fn=cmd_convergents)

    p = sub.add_parser("partial-sums", help="CSV of partial sums and denominators")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--check-convergent", action="store_true")
    p.set_defaults(fn=cmd_partial_sums)

    p = sub.add_parser("cantor", help="Cantor series sums and classification")
    p.add_argument("--family", default="unit", metavar="unit|complement|mask:BITS")
    p.add_argument("--a0", type=int, default=0)
    p.add_argument("--N", type=int, default=10)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--spec-json", metavar="FILE")
    p.set_defaults(fn=cmd_cantor)

    p = sub.add_parser("density", help="range scan of S/P exception counts")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--workers", type=int, default=_workers_default())
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(fn=cmd_verify_paper)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (density.ResourceError, enclosure.DepthCapExceeded, MemoryError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
