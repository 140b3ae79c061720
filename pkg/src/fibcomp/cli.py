"""Command line front end.

Exit codes: 0 success, 1 domain error or bad usage, 2 verification or
certification failure.  Plain output is line-oriented with no trailing
whitespace; --json emits exactly one JSON document.  Identical argv yields
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from mpmath import mp

from . import analytic, bijection, counting, enumeration, genfun, verify
from .core import DomainError, format_composition, parse_composition


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; domain errors own exit 1 here
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument(
        "--cache-dir",
        default=None,
        help="directory for recurrence table files (FIBCOMP_CACHE_DIR as fallback)",
    )

    parser = _Parser(prog="fibcomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[common], help="closed-form and recurrence counts")
    p_count.add_argument("--class", dest="cls", required=True, help="family:kind, e.g. compositions:all")
    p_count.add_argument("n", type=int)

    p_enum = sub.add_parser("enumerate", parents=[common], help="stream a class exhaustively")
    p_enum.add_argument("--class", dest="cls", required=True)
    p_enum.add_argument("--limit", type=int, default=None, help="emit at most this many items")
    p_enum.add_argument("--count", action="store_true", help="print only the stream length")
    p_enum.add_argument("--force", action="store_true", help="allow n above 30")
    p_enum.add_argument("n", type=int)

    p_map = sub.add_parser("map", parents=[common], help="odd-parts bijection and inverse")
    direction = p_map.add_mutually_exclusive_group(required=True)
    direction.add_argument("--odd-to-gt1", action="store_true")
    direction.add_argument("--gt1-to-odd", action="store_true")
    direction.add_argument("--trace", action="store_true", help="forward map with intermediates")
    p_map.add_argument("composition", help='composition in "a1+a2+..." form')

    p_series = sub.add_parser("series", parents=[common], help="generating function coefficients")
    p_series.add_argument(
        "name",
        choices=["partitions", "compositions", "distinct-partitions", "distinct-compositions"],
    )
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--ell", type=int, default=None, help="part count for distinct-partitions")

    p_analytic = sub.add_parser("analytic", parents=[common], help="certified series evaluation")
    p_analytic.add_argument("series", choices=["p", "q"])
    p_analytic.add_argument("n", type=int)
    p_analytic.add_argument("--kmax", type=int, default=None, help="starting term budget")
    p_analytic.add_argument("--bits", type=int, default=None, help="starting working precision")

    p_verify = sub.add_parser("verify", parents=[common], help="run oracle cross-check suites")
    p_verify.add_argument("--suite", choices=list(verify.suite_names()), default=None)
    p_verify.add_argument("--max-n", type=int, default=None)

    return parser


def _emit(lines: list[str]) -> None:
    for line in lines:
        sys.stdout.write(line + "\n")


def _emit_json(document) -> None:
    sys.stdout.write(json.dumps(document) + "\n")


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get("FIBCOMP_CACHE_DIR") or None


def _table_value(kind: str, n: int, cache_dir: str | None) -> int:
    if cache_dir is not None:
        return counting.cached_table(kind, n, cache_dir).values[n]
    return {"p": counting.p_recurrence, "q": counting.q_recurrence, "fib": counting.fibonacci}[
        kind
    ](n)


def _count_value(cls, n: int, cache_dir: str | None) -> int:
    if isinstance(cls, enumeration.CompositionClass):
        if n < 1:
            raise DomainError(f"compositions need n >= 1, got {n}")
        if cls.kind == "all":
            return counting.c_count(n)
        if cls.kind == "odd-parts":
            return _table_value("fib", n, cache_dir)
        if cls.kind == "min-part-2":
            if n < 2:
                raise DomainError(f"min-part-2 compositions need n >= 2, got {n}")
            return _table_value("fib", n - 1, cache_dir)
        return genfun.distinct_compositions_gf(n).coefficient(n)
    if n < 0:
        raise DomainError(f"partitions need n >= 0, got {n}")
    if cls.kind == "all":
        return _table_value("p", n, cache_dir)
    if cls.kind in ("odd-parts", "distinct-parts"):
        return _table_value("q", n, cache_dir)
    return genfun.distinct_partitions_ell_gf(cls.ell, n).coefficient(n)


def _cmd_count(args) -> int:
    cls = enumeration.parse_class(args.cls)
    value = _count_value(cls, args.n, _cache_dir(args))
    if args.json:
        _emit_json({"n": args.n, "class": str(cls), "count": value})
    else:
        _emit([str(value)])
    return 0


def _cmd_enumerate(args) -> int:
    if args.n > 30 and not args.force:
        raise DomainError(f"enumerate for n={args.n} may be huge; pass --force to proceed")
    cls = enumeration.parse_class(args.cls)
    if isinstance(cls, enumeration.CompositionClass):
        stream = enumeration.gen_compositions(args.n, cls)
    else:
        stream = enumeration.gen_partitions(args.n, cls)
    if args.count:
        total = sum(1 for _ in stream)
        if args.json:
            _emit_json({"n": args.n, "class": str(cls), "count": total})
        else:
            _emit([str(total)])
        return 0
    items = []
    for i, value in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        items.append(str(value))
    if args.json:
        _emit_json({"n": args.n, "class": str(cls), "items": items})
    else:
        _emit(items)
    return 0


def _cmd_map(args) -> int:
    comp = parse_composition(args.composition)
    if args.trace:
        trace = bijection.trace_forward(comp)
        fields = [
            ("a", trace.a),
            ("a_conj", trace.a_conj),
            ("b", trace.b),
            ("c", trace.c),
        ]
        if args.json:
            _emit_json({key: format_composition(value) for key, value in fields})
        else:
            _emit([f"{key}={format_composition(value)}" for key, value in fields])
        return 0
    if args.odd_to_gt1:
        result = bijection.odd_to_gt1(comp)
    else:
        result = bijection.gt1_to_odd(comp)
    if args.json:
        _emit_json({"input": format_composition(comp), "output": format_composition(result)})
    else:
        _emit([format_composition(result)])
    return 0


def _cmd_series(args) -> int:
    if args.ell is not None and args.name != "distinct-partitions":
        raise DomainError("--ell only applies to distinct-partitions")
    if args.name == "partitions":
        series = genfun.partition_gf(args.order)
    elif args.name == "compositions":
        series = genfun.compositions_gf(args.order)
    elif args.name == "distinct-partitions":
        if args.ell is None:
            raise DomainError("distinct-partitions needs --ell")
        series = genfun.distinct_partitions_ell_gf(args.ell, args.order)
    else:
        series = genfun.distinct_compositions_gf(args.order)
    if args.json:
        document = {"name": args.name, "order": series.order}
        if args.ell is not None:
            document["ell"] = args.ell
        document["coefficients"] = list(series.coeffs)
        _emit_json(document)
    else:
        _emit([f"{i}\t{c}" for i, c in enumerate(series.coeffs)])
    return 0


def _cmd_analytic(args) -> int:
    evaluate = analytic.rademacher_p if args.series == "p" else analytic.hagis_q
    report = evaluate(args.n, k_max=args.kmax, precision_bits=args.bits)
    raw_text = mp.nstr(report.raw_value.value, 30)
    residual_text = mp.nstr(report.residual.value, 3)
    if args.json:
        _emit_json(
            {
                "series": args.series,
                "n": report.n,
                "rounded": report.rounded,
                "certified": report.certified,
                "k_terms": report.k_terms_used,
                "precision_bits": report.precision_bits,
                "raw": raw_text,
                "residual": residual_text,
            }
        )
    else:
        _emit(
            [
                f"series={args.series}",
                f"n={report.n}",
                f"rounded={report.rounded}",
                f"certified={'true' if report.certified else 'false'}",
                f"k_terms={report.k_terms_used}",
                f"precision_bits={report.precision_bits}",
                f"raw={raw_text}",
                f"residual={residual_text}",
            ]
        )
    return 0


def _cmd_verify(args) -> int:
    names = [args.suite] if args.suite else list(verify.suite_names())
    all_checks: dict[str, list[verify.CheckResult]] = {}
    for name in names:
        all_checks[name] = verify.verify_suite(name, args.max_n)
    failed = sum(1 for checks in all_checks.values() for c in checks if not c.passed)
    total = sum(len(checks) for checks in all_checks.values())
    if args.json:
        _emit_json(
            {
                "suites": {
                    name: [
                        {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
                    ]
                    for name, checks in all_checks.items()
                },
                "passed": failed == 0,
            }
        )
    else:
        lines = []
        for name, checks in all_checks.items():
            for c in checks:
                tag = "[OK]" if c.passed else "[FAIL]"
                lines.append(f"{tag} {name}: {c.name} ({c.detail})")
        lines.append(f"passed {total - failed}/{total} checks")
        _emit(lines)
    return 0 if failed == 0 else 2


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "series": _cmd_series,
    "analytic": _cmd_analytic,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        parser.print_usage(sys.stderr)
        return 1
    except SystemExit as exc:  # --help path
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (analytic.NonCertifiedError, analytic.ImaginaryResidueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
