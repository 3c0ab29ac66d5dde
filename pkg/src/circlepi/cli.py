"""Command-line front end: ``circlepi <command> ...``.

Exit status is 0 on success, 2 on a usage error and 3 when the inputs are
well formed but outside a rule's domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import harness
from .errors import DomainError, InsufficientPrecisionError
from .exactnum import HPDecimal, QuadSurd, evaluate, parse_rational, to_decimal
from .jaina import (
    SegmentSpec,
    arc_length_jaina,
    segment_area_mahavira,
    segment_area_sridhara,
)
from .kerala import corrected_pi
from .oracle import digits_correct, pi_hp, relative_error, sin_oracle
from .siddhanta import (
    bhaskara1_sine,
    bhaskara2_arc,
    interpolate_rsine,
    policy_search,
    polygon_doubling,
    sine_table,
)
from .sulva import CirclingMethod, circle_from_square

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3
FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _grid(text: str) -> list[Fraction]:
    """``a:b:s`` (inclusive) or a comma list of rationals."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError("range grid is start:stop:step")
        start, stop, step = (_rational(p) for p in parts)
        if step <= 0:
            raise argparse.ArgumentTypeError("grid step must be positive")
        points = []
        t = start
        while t <= stop:
            points.append(t)
            t += step
        return points
    return [_rational(p) for p in text.split(",") if p.strip()]


# rendering -----------------------------------------------------------------


def _table(fields: Sequence[str], records: Sequence[dict]) -> str:
    cells = [list(fields)] + [[str(r.get(f, "")) for f in fields] for r in records]
    widths = [max(len(row[i]) for row in cells) for i in range(len(fields))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _emit(fields: Sequence[str], records: Sequence[dict], fmt: str) -> str:
    if fmt == "csv":
        return harness._to_csv(fields, records)
    if fmt == "json":
        return harness._to_json(list(records))
    return _table(fields, records)


def _pairs(pairs: Sequence[tuple[str, str]], fmt: str) -> str:
    """Key/value output: ``key = value`` lines, or a single-record CSV/JSON."""
    if fmt == "table":
        return "".join(f"{k} = {v}\n" for k, v in pairs)
    record = dict(pairs)
    if fmt == "json":
        return json.dumps(record, indent=2, ensure_ascii=False) + "\n"
    return harness._to_csv(list(record), [record])


def _exact_text(x, fmt: str) -> str:
    x = QuadSurd.of(x)
    return str(x) if fmt == "table" else x.ascii()


def _show(x, fmt: str, digits: int) -> str:
    """Exact form with its decimal, or just the decimal."""
    if isinstance(x, HPDecimal):
        return str(x.rescale(digits))
    return f"{_exact_text(x, fmt)} = {evaluate(x, digits)}" if fmt == "table" else _exact_text(x, fmt)


# commands ------------------------------------------------------------------


def cmd_pi(args) -> str:
    if args.digits > harness.MAX_CATALOG_DIGITS:
        raise UsageError(f"--digits must be at most {harness.MAX_CATALOG_DIGITS}")
    rows = harness.pi_catalog(args.digits)
    if args.format == "csv":
        return harness.catalog_csv(rows)
    if args.format == "json":
        return harness.catalog_json(rows)
    records = [
        {
            "method_id": r.method_id,
            "tradition": r.tradition.value,
            "exact_form": r.exact_text(unicode=True),
            "value": str(r.value),
            "rel_error": str(r.rel_error),
            "digits_correct": r.digits_correct,
            "era": r.era_label,
        }
        for r in rows
    ]
    fields = harness.CATALOG_FIELDS + ("era",)
    return _table(fields, records)


def cmd_construct(args) -> str:
    res = circle_from_square(args.side, CirclingMethod(args.method), args.digits)
    fmt = args.format
    pairs = [("method", res.method.value), ("side", str(res.side))]
    if res.radius is not None:
        pairs.append(("radius", _exact_text(res.radius, fmt)))
    else:
        pairs.append(("r^2" if fmt != "table" else "r²", _exact_text(res.radius_sq, fmt)))
    pairs += [
        ("radius_value", str(res.radius_value)),
        ("area_ratio", str(res.area_ratio)),
        ("implied_pi", _exact_text(res.implied_pi, fmt)),
        ("implied_pi_value", str(res.implied_pi_value)),
    ]
    return _pairs(pairs, fmt)


SEGMENT_RULES = {
    "jaina_arc": arc_length_jaina,
    "mahavira_area": segment_area_mahavira,
    "sridhara_area": segment_area_sridhara,
}


def cmd_segment(args) -> str:
    if (args.c is None) == (args.h is None):
        raise UsageError("give exactly one of --c and --h")
    seg = SegmentSpec.from_chord(args.c, args.d) if args.c is not None else SegmentSpec.from_arrow(args.h, args.d)
    work = args.digits + 10
    fmt = args.format
    pairs = [
        ("d", _show(seg.d, fmt, args.digits)),
        ("c", _show(seg.c, fmt, args.digits)),
        ("h", _show(seg.h, fmt, args.digits)),
    ]
    names = SEGMENT_RULES if args.formula == "all" else [args.formula]
    for name in names:
        pairs.append((name, _show(SEGMENT_RULES[name](seg.c, seg.h, work), fmt, args.digits)))
    return _pairs(pairs, fmt)


def cmd_sine(args) -> str:
    if (args.theta is None) == (args.table is None):
        raise UsageError("give exactly one of --theta and --table")
    if args.table is not None:
        table = sine_table(args.table)
        if args.format == "csv":
            return table.to_csv()
        if args.format == "json":
            return table.to_json()
        return _table(("index", "arcmin", "rsine", "diff"), table.rows())
    theta = args.theta
    if not 0 <= theta <= 180:
        raise DomainError(f"angle {theta} outside [0, 180]")
    oracle = sin_oracle(theta, args.digits + 10)
    b = bhaskara1_sine(theta)
    pairs = [
        ("theta", str(theta)),
        ("sin", str(oracle.rescale(args.digits))),
        ("bhaskara1", _show(b, args.format, args.digits)),
    ]
    if oracle.mantissa != 0 or not oracle.is_exact:
        pairs.append(("bhaskara1_rel_error", str(relative_error(b, oracle, args.digits))))
    if theta <= 90:
        table = sine_table(args.rsine_radius)
        t = interpolate_rsine(table, theta) / table.R
        pairs.append((f"table_R{table.R}", str(to_decimal(t, args.digits))))
    return _pairs(pairs, args.format)


def cmd_arc(args) -> str:
    digits, fmt = args.digits, args.format
    ratio = bhaskara2_arc(args.c, args.d, Fraction(1), digits)
    if args.p is not None:
        value = bhaskara2_arc(args.c, args.d, args.p, digits)
        pairs = [("p", str(args.p)), ("arc", _show(value, fmt, digits))]
    else:
        value = bhaskara2_arc(args.c, args.d, None, digits)
        pairs = [("p", f"pi*{args.d} (oracle)"), ("arc/p", _show(ratio, fmt, digits)), ("arc", _show(value, fmt, digits))]
    return _pairs(pairs, fmt)


def cmd_kerala(args) -> str:
    digits = args.digits
    work = digits + 10
    pi = pi_hp(work)
    if args.trace:
        records = []
        for n in range(1, args.n + 1):
            est = corrected_pi(n, args.sign)
            records.append(
                {
                    "n": n,
                    "partial_pi": str(to_decimal(4 * est.partial, digits)),
                    "corrected_pi": str(to_decimal(est.pi_estimate, digits)),
                    "error": str(relative_error(est.pi_estimate, pi, work - 2).rescale(digits)),
                    "digits_correct": digits_correct(est.pi_estimate, pi),
                }
            )
        return _emit(tuple(records[0]), records, args.format)
    est = corrected_pi(args.n, args.sign)
    pairs = [
        ("n", str(args.n)),
        ("sign", est.sign_policy),
        ("partial_pi", str(to_decimal(4 * est.partial, digits))),
        ("estimate", str(to_decimal(est.pi_estimate, digits))),
        ("abs_error", str((est.pi_estimate - pi).rescale(digits))),
        ("digits_correct", str(digits_correct(est.pi_estimate, pi))),
    ]
    if args.format == "table":
        return "".join(f"{k}: {v}\n" for k, v in pairs)
    return _pairs(pairs, args.format)


def cmd_doubling(args) -> str:
    if args.search:
        report = policy_search(args.diameter, args.doublings, args.target)
        return report.summary() + "\n"
    policy = args.policy.split(",") if "," in args.policy else args.policy
    res = polygon_doubling(args.diameter, args.doublings, policy, args.digits)
    out = ""
    if args.trace:
        records = [
            {
                "sides": s.sides,
                "perimeter_sq": str(s.perimeter_sq),
                "inner_root": "" if s.apothem_root is None else s.apothem_root,
                "rounding": s.rounding or "",
            }
            for s in res.trace
        ]
        if args.digits is not None:
            for r in records:
                r["perimeter_sq"] = str(to_decimal(Fraction(r["perimeter_sq"]), args.digits))
        out = _emit(tuple(records[0]), records, args.format)
    ratio = res.ratio if isinstance(res.ratio, HPDecimal) else f"{res.ratio} = {to_decimal(res.ratio, 10)}"
    pairs = [
        ("diameter", str(res.diameter)),
        ("sides", str(res.sides)),
        ("perimeter", str(res.perimeter)),
        ("ratio", str(ratio)),
    ]
    if res.policy is not None:
        pairs.append(("policy", ",".join(res.policy)))
    return out + _pairs(pairs, args.format if not args.trace else "table")


def cmd_scan(args) -> str:
    if args.formula == "sine":
        scan = harness.sine_error_scan(args.grid, args.rsine_radius, args.digits)
        records = [r.as_record() for r in scan.rows] + [scan.summary_record()]
        return _emit(harness.SINE_SCAN_FIELDS, records, args.format)
    rows = harness.segment_error_scan(args.formula, args.grid, args.digits)
    return _emit(harness.SCAN_FIELDS, [r.as_record() for r in rows], args.format)


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlepi", description="Historical Indian circle geometry and values of pi."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, digits=15):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=FORMATS, default="table")
        if digits is not None:
            p.add_argument("--digits", type=_positive_int, default=digits)
        p.set_defaults(func=func)
        return p

    add("pi", cmd_pi, "catalog of pi values with signed errors")

    p = add("construct", cmd_construct, "circle from a square")
    p.add_argument("--method", choices=[m.value for m in CirclingMethod], required=True)
    p.add_argument("--side", type=_rational, default=Fraction(1))

    p = add("segment", cmd_segment, "Jaina chord, arrow, arc and segment area")
    p.add_argument("--d", type=_rational, required=True)
    p.add_argument("--c", type=_rational)
    p.add_argument("--h", type=_rational)
    p.add_argument("--formula", choices=["all", *SEGMENT_RULES], default="all")

    p = add("sine", cmd_sine, "Rsine table or Bhaskara I sine at one angle", digits=10)
    p.add_argument("--theta", type=_rational)
    p.add_argument("--table", type=_positive_int, metavar="R")
    p.add_argument("--rsine-radius", type=_positive_int, default=3438)

    p = add("arc", cmd_arc, "Bhaskara II arc from chord")
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--d", type=_rational, required=True)
    p.add_argument("--p", type=_rational)

    p = add("kerala", cmd_kerala, "series for pi with end correction")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--sign", choices=["empirical", "paper_literal"], default="empirical")
    p.add_argument("--trace", action="store_true")

    p = add("doubling", cmd_doubling, "perimeter of inscribed polygons by doubling", digits=None)
    p.add_argument("--diameter", type=_positive_int, default=20000)
    p.add_argument("--doublings", type=int, default=6)
    p.add_argument("--policy", default="floor", help="one mode, or comma list of doublings+1 modes")
    p.add_argument("--digits", type=_positive_int, default=None, help="high-precision mode")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--search", action="store_true", help="try every rounding policy")
    p.add_argument("--target", type=int, default=62832)

    p = add("scan", cmd_scan, "error curves over a grid of angles", digits=10)
    p.add_argument("--formula", choices=[*harness.SEGMENT_FORMULAS, "sine"], required=True)
    p.add_argument("--grid", type=_grid, default=_grid("10:170:10"))
    p.add_argument("--rsine-radius", type=_positive_int, default=3438)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        text = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"circlepi {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, InsufficientPrecisionError) as exc:
        sys.stderr.write(f"circlepi {args.command}: domain error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        sys.stderr.write(f"circlepi {args.command}: error: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
