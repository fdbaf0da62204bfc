"""Batch command-line front end.

Subcommands: hilbert, degree, series, koszul, kostka, polytope, certify,
export-gb.  Exit codes: 0 success, 1 usage error, 2 mathematical
cross-check failure.  Output is deterministic byte for byte: JSON is
emitted with sorted keys and CSV with a fixed header row.

The environment variable EVENPOINTS_THREADS sets the worker-thread count
for table commands; results are collected in submission order, so the
output does not depend on it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

from .combinatorics import WeightVector, kostka_bruteforce
from .hilbert import (
    SUBSET_CAP,
    degree,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    koszul_numerical_check,
    rational_form,
)
from .polytope import content_polytope, lattice_points, normality_check, triangle_polytope
from .toric import buchberger_check, groebner_certify, groebner_json, radical_certificate

__all__ = ["main", "console_main", "parse_weights"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CROSSCHECK = 2

THREADS_ENV = "EVENPOINTS_THREADS"


class UsageError(Exception):
    pass


class CrossCheckError(Exception):
    pass


def parse_weights(text: str) -> WeightVector:
    """Parse '2,4,2,4' or repeat notation '1^8' (mixtures allowed)."""
    entries: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise UsageError(f"empty weight entry in {text!r}")
        if "^" in token:
            base, _, count = token.partition("^")
            try:
                entries.extend([int(base)] * int(count))
            except ValueError:
                raise UsageError(f"bad repeat token {token!r}") from None
        else:
            try:
                entries.append(int(token))
            except ValueError:
                raise UsageError(f"bad weight token {token!r}") from None
    try:
        return WeightVector(tuple(entries))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        count = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if count < 1:
        raise UsageError(f"{THREADS_ENV} must be >= 1")
    return count


def _ordered_map(fn: Callable, items: Sequence) -> list:
    workers = worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _emit_rows(rows: list[tuple], header: tuple[str, ...], fmt: str, payload: dict) -> None:
    if fmt == "json":
        _emit_json(payload)
    elif fmt == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(x) for x in row))
    else:
        for row in rows:
            print(" ".join(str(x) for x in row))


def _subset_cap(args: argparse.Namespace) -> int | None:
    return None if args.force else args.subset_cap


def cmd_hilbert(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    cap = _subset_cap(args)
    series = hilbert_series(w, args.dmax, subset_cap=cap)
    rows = [(d, series[d]) for d in range(args.dmax + 1)]
    oracle_status = None
    if args.oracle:
        oracle_status = "match"
        for d in range(1, args.dmax + 1):
            brute = kostka_bruteforce(w, d)
            if brute != series[d]:
                oracle_status = f"mismatch at d={d}: formula {series[d]}, enumeration {brute}"
                break
    payload = {
        "command": "hilbert",
        "weights": list(w.entries),
        "dmax": args.dmax,
        "values": [list(r) for r in rows],
        "oracle": oracle_status,
    }
    _emit_rows(rows, ("d", "h"), args.format, payload)
    if args.oracle and args.format == "plain":
        print(f"oracle {oracle_status}")
    if oracle_status not in (None, "match"):
        print(f"cross-check failed: {oracle_status}", file=sys.stderr)
        return EXIT_CROSSCHECK
    return EXIT_OK


def _checked_degree(w: WeightVector, cap: int | None) -> int:
    """Degree with the leading-coefficient cross-check."""
    value = degree(w, subset_cap=cap)
    coeffs = hilbert_polynomial(w, subset_cap=cap)
    lead = coeffs[w.n - 3]
    expected = lead * math.factorial(w.n - 3)
    if expected != value:
        raise CrossCheckError(
            f"degree {value} disagrees with (n-3)! * leading coefficient = {expected}"
        )
    return value


def cmd_degree(args: argparse.Namespace) -> int:
    cap = _subset_cap(args)
    if args.table:
        if args.table == "ones":
            ns = [n for n in range(4, args.n_max + 1) if n % 2 == 0]
            weight_of = lambda n: WeightVector((1,) * n)
        else:
            ns = list(range(4, args.n_max + 1))
            weight_of = lambda n: WeightVector((2,) * n)
        try:
            values = _ordered_map(lambda n: _checked_degree(weight_of(n), cap), ns)
        except CrossCheckError as exc:
            print(f"cross-check failed: {exc}", file=sys.stderr)
            return EXIT_CROSSCHECK
        rows = list(zip(ns, values))
        payload = {
            "command": "degree",
            "table": args.table,
            "values": [list(r) for r in rows],
        }
        _emit_rows(rows, ("n", "degree"), args.format, payload)
        return EXIT_OK
    if not args.weights:
        raise UsageError("degree needs -w or --table")
    w = parse_weights(args.weights)
    if not w.even_total:
        raise UsageError(f"|w| = {w.total} is odd; the quotient has no even grading")
    try:
        value = _checked_degree(w, cap)
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    if args.format == "json":
        _emit_json({"command": "degree", "weights": list(w.entries), "degree": value})
    elif args.format == "csv":
        print("weights,degree")
        print(f"{'.'.join(map(str, w.entries))},{value}")
    else:
        print(value)
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    cap = _subset_cap(args)
    series = hilbert_series(w, args.dmax, subset_cap=cap)
    e = args.denom_exp if args.denom_exp is not None else w.n - 2
    try:
        form = rational_form(series, e)
    except ValueError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    if list(form.expand(series.truncation)) != list(series):
        print("cross-check failed: rational form does not expand back", file=sys.stderr)
        return EXIT_CROSSCHECK
    payload = {
        "command": "series",
        "weights": list(w.entries),
        "dmax": args.dmax,
        "coefficients": list(series),
        "numerator": list(form.numerator),
        "denominator_exponent": e,
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        print("d,h")
        for d, h in enumerate(series):
            print(f"{d},{h}")
    else:
        print("coefficients " + ",".join(str(c) for c in series))
        print("numerator " + ",".join(str(c) for c in form.numerator))
        print(f"denominator (1-z)^{e}")
    return EXIT_OK


def cmd_koszul(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    cap = _subset_cap(args)
    inv, first_negative = koszul_numerical_check(w, args.depth, subset_cap=cap)
    verdict = (
        f"NEGATIVE-AT-{first_negative}" if first_negative is not None else f"INCONCLUSIVE-TO-{args.depth}"
    )
    payload = {
        "command": "koszul",
        "weights": list(w.entries),
        "depth": args.depth,
        "coefficients": list(inv),
        "first_negative": first_negative,
        "verdict": verdict,
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        print("d,coefficient")
        for d, c in enumerate(inv):
            print(f"{d},{c}")
        print(f"verdict,{verdict}")
    else:
        print("coefficients " + ",".join(str(c) for c in inv))
        print(verdict)
    return EXIT_OK


def cmd_kostka(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    rows = [(d, kostka_bruteforce(w, d)) for d in range(1, args.dmax + 1)]
    payload = {
        "command": "kostka",
        "weights": list(w.entries),
        "dmax": args.dmax,
        "values": [list(r) for r in rows],
    }
    _emit_rows(rows, ("d", "count"), args.format, payload)
    return EXIT_OK


def cmd_polytope(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    payload: dict = {"command": "polytope", "weights": list(w.entries)}
    want = args.which
    built = {}
    if want in ("content", "both"):
        built["content"] = content_polytope(w)
    if want in ("triangle", "both"):
        if not w.all_even:
            if want == "triangle":
                raise UsageError("triangle polytope needs all-even weights")
        elif w.n < 4:
            if want == "triangle":
                raise UsageError("triangle polytope needs n >= 4")
        else:
            built["triangle"] = triangle_polytope(w)
    if not built:
        raise UsageError("no polytope is defined for these weights")
    for name, poly in built.items():
        payload[name] = poly.to_json_dict()
        if args.dmax is not None:
            counts = {}
            for d in range(args.dmax + 1):
                pts = lattice_points(poly, d)
                counts[str(d)] = len(pts)
                if args.points:
                    payload[name].setdefault("points", {})[str(d)] = [list(p) for p in pts]
            payload[name]["counts"] = counts
    _emit_json(payload)
    return EXIT_OK


def _require_even(w: WeightVector, what: str) -> None:
    if w.all_even:
        return
    hint = ""
    if not w.even_total:
        # for odd total weight the invariant ring coincides with the one for
        # doubled weights, so the doubled run certifies the same ring
        hint = f"; rerun with doubled weights ({','.join(str(2 * e) for e in w.entries)})"
    raise UsageError(f"{what} needs all-even weights{hint}")


def cmd_certify(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    _require_even(w, "certification")
    if w.n < 4:
        raise UsageError("certification needs n >= 4")
    checks: list[tuple[str, str, dict]] = []

    normality = normality_check(w, args.mmax)
    checks.append(
        (
            "normality",
            "PASS" if normality.ok else "FAIL",
            {
                "levels": [list(c) for c in normality.level_counts],
                "failures": list(normality.failures),
            },
        )
    )
    certificate = groebner_certify(w, args.dmax)
    checks.append(
        (
            "groebner",
            "PASS" if certificate.ok else "FAIL",
            {
                "degrees": [list(r) for r in certificate.degrees],
                "first_mismatch": certificate.first_mismatch,
            },
        )
    )
    radical = radical_certificate(w)
    checks.append(("radical", "PASS" if radical else "FAIL", {"square_free": radical}))
    if args.buchberger:
        report = buchberger_check(w, max_variables=args.max_variables)
        checks.append(
            (
                "buchberger",
                "PASS" if report.ok else "FAIL",
                {
                    "generators": report.generators,
                    "s_pairs": report.s_pairs,
                    "failures": list(report.failures),
                },
            )
        )
    all_ok = all(status == "PASS" for _, status, _ in checks)
    if args.format == "json" or not all_ok:
        _emit_json(
            {
                "command": "certify",
                "weights": list(w.entries),
                "checks": {name: {"status": status, **detail} for name, status, detail in checks},
                "overall": "PASS" if all_ok else "FAIL",
            }
        )
    else:
        for name, status, detail in checks:
            extra = ""
            if name == "normality":
                extra = " levels " + ",".join(f"{m}:{c}" for m, c in normality.level_counts)
            elif name == "groebner":
                extra = " degrees " + ",".join(str(r[1]) for r in certificate.degrees)
            elif name == "buchberger":
                extra = f" s-pairs {detail['s_pairs']}"
            print(f"{name} {status}{extra}")
        print("overall PASS")
    return EXIT_OK if all_ok else EXIT_CROSSCHECK


def cmd_export_gb(args: argparse.Namespace) -> int:
    w = parse_weights(args.weights)
    _require_even(w, "the quadratic basis")
    if w.n < 4:
        raise UsageError("the quadratic basis needs n >= 4")
    data = groebner_json(w)
    text = json.dumps(
        {"command": "export-gb", "weights": list(w.entries), "relations": data},
        sort_keys=True,
        separators=(",", ":"),
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise UsageError(message)


def _add_common(sub: argparse.ArgumentParser, *, weights_required: bool = True) -> None:
    sub.add_argument("-w", "--weights", required=weights_required, help="weights, e.g. 2,4,2,4 or 1^8")
    sub.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain", help="output format"
    )
    sub.add_argument(
        "--subset-cap",
        type=int,
        default=SUBSET_CAP,
        help=f"refuse subset enumeration beyond this n (default {SUBSET_CAP})",
    )
    sub.add_argument("--force", action="store_true", help="lift the subset cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="evenpoints", description=__doc__, add_help=True)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("hilbert", help="graded dimensions h(0..dmax)")
    _add_common(p)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--oracle", action="store_true", help="cross-check against enumeration")
    p.set_defaults(fn=cmd_hilbert)

    p = subs.add_parser("degree", help="degree of the quotient")
    _add_common(p, weights_required=False)
    p.add_argument("--table", choices=("ones", "twos"), help="emit a table for 1^n or 2^n")
    p.add_argument("--n-max", type=int, default=12)
    p.set_defaults(fn=cmd_degree)

    p = subs.add_parser("series", help="series plus rational numerator")
    _add_common(p)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--denom-exp", type=int, default=None, help="denominator exponent (default n-2)")
    p.set_defaults(fn=cmd_series)

    p = subs.add_parser("koszul", help="coefficients of H(-z)^{-1} and verdict")
    _add_common(p)
    p.add_argument("--depth", type=int, default=20)
    p.set_defaults(fn=cmd_koszul)

    p = subs.add_parser("kostka", help="brute-force tableau counts")
    _add_common(p)
    p.add_argument("--dmax", type=int, default=4)
    p.set_defaults(fn=cmd_kostka)

    p = subs.add_parser("polytope", help="JSON H-representation export")
    _add_common(p)
    p.add_argument("--which", choices=("content", "triangle", "both"), default="both")
    p.add_argument("--dmax", type=int, default=None, help="also count lattice points up to dmax")
    p.add_argument("--points", action="store_true", help="include the point lists")
    p.set_defaults(fn=cmd_polytope)

    p = subs.add_parser("certify", help="normality + Groebner + radical certificates")
    _add_common(p)
    p.add_argument("--dmax", type=int, default=4, help="certify degrees up to dmax")
    p.add_argument("--mmax", type=int, default=3, help="decompose dilates up to mmax")
    p.add_argument("--buchberger", action="store_true", help="also reduce all S-pairs")
    p.add_argument("--max-variables", type=int, default=40, help="Buchberger size guard")
    p.set_defaults(fn=cmd_certify)

    p = subs.add_parser("export-gb", help="quadratic basis as JSON")
    _add_common(p)
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(fn=cmd_export_gb)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
