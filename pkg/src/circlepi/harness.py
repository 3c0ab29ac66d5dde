"""Side-by-side error analysis of every pi value and circle rule in the package.

Each row carries the exact form of a historical value, its decimal
rendering, the signed relative error against the oracle and the number of
decimals it gets right. Output is deterministic: rows are ordered by a
fixed key, never by execution order.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DomainError
from .exactnum import HPDecimal, Number, QuadSurd, evaluate, to_decimal
from .jaina import (
    SQRT10,
    SegmentSpec,
    arc_length_jaina,
    segment_area_mahavira,
    segment_area_sridhara,
    virasena_circumference,
)
from .kerala import corrected_pi, madhava_value
from .oracle import digits_correct, pi_hp, relative_error, sin_oracle
from .siddhanta import (
    SineTable,
    aryabhata_pi,
    bhaskara1_sine,
    bhaskara2_arc,
    interpolate_rsine,
    sine_table,
)
from .sulva import (
    CirclingMethod,
    circle_from_square,
    manava_circumference,
    sqrt2_sulva,
    squaring_ratio,
    vedic_circumference,
)

__all__ = [
    "CATALOG_FIELDS",
    "MethodResult",
    "ScanRow",
    "SineScan",
    "SineScanRow",
    "Tradition",
    "catalog_csv",
    "catalog_json",
    "percent",
    "pi_catalog",
    "scan_csv",
    "scan_json",
    "segment_error_scan",
    "sine_error_scan",
    "sqrt2_catalog",
    "sulva_round_trip",
]

MAX_CATALOG_DIGITS = 50
CATALOG_FIELDS = ("method_id", "tradition", "exact_form", "value", "rel_error", "digits_correct")


class Tradition(enum.Enum):
    VEDIC = "Vedic"
    SULVA = "Sulva"
    JAINA = "Jaina"
    SIDDHANTA = "Siddhanta"
    KERALA = "Kerala"
    EXTERNAL = "External"


@dataclass(frozen=True)
class MethodResult:
    method_id: str
    tradition: Tradition
    exact_form: Fraction | QuadSurd | None
    value: HPDecimal
    rel_error: HPDecimal
    digits_correct: int
    era_label: str = ""

    def exact_text(self, unicode: bool = False) -> str:
        if self.exact_form is None:
            return ""
        x = QuadSurd.of(self.exact_form)
        return str(x) if unicode else x.ascii()

    def as_record(self) -> dict[str, str | int]:
        return {
            "method_id": self.method_id,
            "tradition": self.tradition.value,
            "exact_form": self.exact_text(),
            "value": str(self.value),
            "rel_error": str(self.rel_error),
            "digits_correct": self.digits_correct,
        }


def _pi_entries() -> list[tuple[str, Tradition, Fraction | QuadSurd, str]]:
    unit = Fraction(1)
    return [
        ("vedic", Tradition.VEDIC, vedic_circumference(unit), "Baudhayana, c. 800 BCE"),
        ("manava_circumference", Tradition.SULVA, manava_circumference(unit), "Manava Sulvasutra"),
        (
            "baudhayana_circling",
            Tradition.SULVA,
            circle_from_square(1, CirclingMethod.BAUDHAYANA).implied_pi,
            "Baudhayana Sulvasutra (implied)",
        ),
        (
            "manava_circling",
            Tradition.SULVA,
            circle_from_square(1, CirclingMethod.MANAVA).implied_pi,
            "Manava Sulvasutra (implied)",
        ),
        (
            "maitrayaniya_circling",
            Tradition.SULVA,
            circle_from_square(1, CirclingMethod.MAITRAYANIYA).implied_pi,
            "Maitrayaniya Sulvasutra (implied); also Nemicandra",
        ),
        (
            "baudhayana_squaring",
            Tradition.SULVA,
            4 * squaring_ratio() ** 2,
            "Baudhayana Sulvasutra (implied)",
        ),
        ("jaina_sqrt10", Tradition.JAINA, SQRT10, "Suryaprajnapti onward"),
        ("virasena", Tradition.JAINA, virasena_circumference(unit), "Virasena, 8th c. CE"),
        ("aryabhata", Tradition.SIDDHANTA, aryabhata_pi(), "Aryabhatiya, 499 CE"),
        ("madhava", Tradition.KERALA, madhava_value(), "Madhava, 14th c. CE"),
        (
            "madhava_corrected_50",
            Tradition.KERALA,
            corrected_pi(50).pi_estimate,
            "series with end correction, 50 terms",
        ),
        ("ptolemy", Tradition.EXTERNAL, Fraction(377, 120), "Ptolemy, sexagesimal 3;8,30"),
        ("egyptian", Tradition.EXTERNAL, Fraction(256, 81), "Egyptian (16/9)^2"),
        ("zu_chongzhi", Tradition.EXTERNAL, Fraction(355, 113), "Zu Chongzhi (429-500)"),
    ]


def _rows(
    entries: Iterable[tuple[str, Tradition, Fraction | QuadSurd, str]],
    reference: Callable[[int], HPDecimal],
    digits: int,
) -> list[MethodResult]:
    if not 1 <= digits <= MAX_CATALOG_DIGITS:
        raise DomainError(f"digits must be in 1..{MAX_CATALOG_DIGITS}")
    work = max(digits, 20) + 10
    ref = reference(work)
    keyed = []
    for method_id, tradition, exact, era in entries:
        rel = relative_error(exact, ref, work - 2)
        row = MethodResult(
            method_id=method_id,
            tradition=tradition,
            exact_form=exact,
            value=evaluate(exact, digits),
            rel_error=rel.rescale(digits),
            digits_correct=digits_correct(exact, ref),
            era_label=era,
        )
        keyed.append(((-abs(rel.center), method_id), row))
    keyed.sort(key=lambda item: item[0])
    return [row for _, row in keyed]


def pi_catalog(digits: int = 15) -> list[MethodResult]:
    """Every pi value, sorted by |relative error|, largest first."""
    return _rows(_pi_entries(), pi_hp, digits)


def sqrt2_catalog(digits: int = 15) -> list[MethodResult]:
    """The two sqrt(2) values, measured against sqrt(2)."""
    entries = [
        ("sulva_sqrt2", Tradition.SULVA, sqrt2_sulva(), "Baudhayana, Apastamba, Katyayana"),
        (
            "babylonian_sqrt2",
            Tradition.EXTERNAL,
            Fraction(30547, 21600),
            "Babylonian, sexagesimal 1;24,51,10",
        ),
    ]
    return _rows(entries, lambda d: evaluate(QuadSurd(0, 1, 2), d), digits)


def sulva_round_trip(digits: int = 15) -> tuple[HPDecimal, HPDecimal]:
    """Signed errors of circling the unit square and of squaring the unit circle.

    The first is circle area over square area minus one; the second is the
    square's area over pi minus one.
    """
    work = digits + 10
    circling = circle_from_square(1, CirclingMethod.BAUDHAYANA, work).area_ratio - 1
    squaring = relative_error(4 * squaring_ratio() ** 2, pi_hp(work), work - 2)
    return circling.rescale(digits), squaring.rescale(digits)


def _to_csv(fieldnames: Sequence[str], records: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def _to_json(records: list[dict]) -> str:
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def catalog_csv(rows: Sequence[MethodResult]) -> str:
    return _to_csv(CATALOG_FIELDS, (r.as_record() for r in rows))


def catalog_json(rows: Sequence[MethodResult]) -> str:
    return _to_json([r.as_record() for r in rows])


# error curves --------------------------------------------------------------

SEGMENT_FORMULAS = ("jaina_arc", "mahavira_area", "sridhara_area", "bhaskara2_arc")
SCAN_FIELDS = ("theta", "value", "oracle", "rel_error")


@dataclass(frozen=True)
class ScanRow:
    theta: Fraction
    value: HPDecimal
    oracle: HPDecimal
    rel_error: HPDecimal

    def as_record(self) -> dict[str, str]:
        return {
            "theta": str(self.theta),
            "value": str(self.value),
            "oracle": str(self.oracle),
            "rel_error": str(self.rel_error),
        }


def _grid(grid: Iterable[Fraction | int], lo_open: bool, hi: int) -> list[Fraction]:
    points = [Fraction(t) for t in grid]
    if not points:
        raise DomainError("empty angle grid")
    for t in points:
        if t > hi or t < 0 or (lo_open and t == 0):
            raise DomainError(f"angle {t} outside the grid domain")
    return points


def _segment_value(formula: str, seg: SegmentSpec, digits: int) -> Number:
    if formula == "jaina_arc":
        return arc_length_jaina(seg.c, seg.h, digits)
    if formula == "mahavira_area":
        return segment_area_mahavira(seg.c, seg.h, digits)
    if formula == "sridhara_area":
        return segment_area_sridhara(seg.c, seg.h, digits)
    return bhaskara2_arc(seg.c, seg.d, digits=digits)


def segment_error_scan(
    formula: str, grid: Iterable[Fraction | int], digits: int = 10
) -> list[ScanRow]:
    """Relative error of a chord/arrow rule on the unit circle, per central angle.

    Arc rules are compared with the true arc (theta in radians); area rules
    with the true segment area (theta - sin theta) / 2.
    """
    if formula not in SEGMENT_FORMULAS:
        raise ValueError(f"unknown formula {formula!r}; pick one of {SEGMENT_FORMULAS}")
    points = _grid(grid, lo_open=True, hi=180)
    work = digits + 10
    pi = pi_hp(work + 5)
    rows = []
    for theta in points:
        seg = SegmentSpec.from_central_angle(theta, 2)
        value = evaluate(_segment_value(formula, seg, work), work)
        radians = pi * theta / 180
        if formula.endswith("_arc"):
            oracle = radians.rescale(work)
        else:
            oracle = ((radians - sin_oracle(theta, work + 5)) / 2).rescale(work)
        rows.append(
            ScanRow(
                theta,
                value.rescale(digits),
                oracle.rescale(digits),
                relative_error(value, oracle, digits),
            )
        )
    return rows


def scan_csv(rows: Sequence[ScanRow]) -> str:
    return _to_csv(SCAN_FIELDS, (r.as_record() for r in rows))


def scan_json(rows: Sequence[ScanRow]) -> str:
    return _to_json([r.as_record() for r in rows])


@dataclass(frozen=True)
class SineScanRow:
    theta: Fraction
    oracle: HPDecimal
    bhaskara: HPDecimal
    bhaskara_error: HPDecimal | None
    table: HPDecimal | None
    table_error: HPDecimal | None

    def as_record(self) -> dict[str, str]:
        def text(x):
            return "" if x is None else str(x)

        return {
            "theta": str(self.theta),
            "oracle": str(self.oracle),
            "bhaskara": str(self.bhaskara),
            "bhaskara_error": text(self.bhaskara_error),
            "table": text(self.table),
            "table_error": text(self.table_error),
        }


@dataclass(frozen=True)
class SineScan:
    rows: tuple[SineScanRow, ...]
    max_bhaskara_error: HPDecimal | None
    max_bhaskara_theta: Fraction | None
    max_table_error: HPDecimal | None
    max_table_theta: Fraction | None

    def summary_record(self) -> dict[str, str]:
        def text(x):
            return "" if x is None else str(x)

        return {
            "theta": "max",
            "oracle": "",
            "bhaskara": text(self.max_bhaskara_theta),
            "bhaskara_error": text(self.max_bhaskara_error),
            "table": text(self.max_table_theta),
            "table_error": text(self.max_table_error),
        }

    def to_csv(self) -> str:
        records = [r.as_record() for r in self.rows] + [self.summary_record()]
        return _to_csv(SINE_SCAN_FIELDS, records)

    def to_json(self) -> str:
        return _to_json([r.as_record() for r in self.rows] + [self.summary_record()])


SINE_SCAN_FIELDS = ("theta", "oracle", "bhaskara", "bhaskara_error", "table", "table_error")


def _largest(pairs: list[tuple[Fraction, HPDecimal]]):
    if not pairs:
        return None, None
    theta, err = max(pairs, key=lambda p: (abs(p[1].center), -p[0]))
    return err, theta


def sine_error_scan(
    grid: Iterable[Fraction | int], table: SineTable | int = 3438, digits: int = 10
) -> SineScan:
    """Bhaskara I's sine and table interpolation against the sine oracle.

    The table column only covers [0, 90]. Rows where the true sine is zero
    carry no relative error.
    """
    points = _grid(grid, lo_open=False, hi=180)
    if isinstance(table, int):
        table = sine_table(table)
    work = digits + 10
    rows = []
    b_errs, t_errs = [], []
    for theta in points:
        oracle = sin_oracle(theta, work)
        b = bhaskara1_sine(theta)
        zero = oracle.is_exact and oracle.mantissa == 0
        b_err = None if zero else relative_error(b, oracle, digits)
        t_val = t_err = None
        if theta <= 90:
            t_exact = interpolate_rsine(table, theta) / table.R
            t_val = to_decimal(t_exact, digits)
            t_err = None if zero else relative_error(t_exact, oracle, digits)
        rows.append(
            SineScanRow(theta, oracle.rescale(digits), to_decimal(b, digits), b_err, t_val, t_err)
        )
        if b_err is not None:
            b_errs.append((theta, b_err))
        if t_err is not None:
            t_errs.append((theta, t_err))
    mb, mb_theta = _largest(b_errs)
    mt, mt_theta = _largest(t_errs)
    return SineScan(tuple(rows), mb, mb_theta, mt, mt_theta)


def percent(x: HPDecimal, places: int = 4) -> str:
    """Signed percentage, e.g. ``+1.7252%``."""
    p = (x * 100).rescale(places)
    text = str(p)
    return ("+" + text if p.mantissa > 0 else text) + "%"
