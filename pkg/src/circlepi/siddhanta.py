"""Computations of the astronomical (siddhanta) tradition.

Polygon doubling towards 62832/20000, Rsine tables kept as first
differences, linear interpolation in such a table, Bhaskara I's rational
sine and Bhaskara II's arc-from-chord rule.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .exactnum import (
    ROUNDING_MODES,
    HPDecimal,
    Number,
    QuadSurd,
    RoundingMode,
    evaluate,
    isqrt,
    mixed_mul,
    sqrt,
)
from .oracle import exact_sin, pi_hp, sin_oracle

__all__ = [
    "DoublingResult",
    "DoublingState",
    "PolicySearchReport",
    "SineTable",
    "aryabhata_pi",
    "bhaskara1_sine",
    "bhaskara2_arc",
    "bhaskara2_arc_verse",
    "interpolate_rsine",
    "polygon_doubling",
    "polygon_doubling_hp",
    "polygon_doubling_int",
    "policy_search",
    "sine_table",
]

MAX_DOUBLINGS = 20


def aryabhata_pi() -> Fraction:
    """Circumference 62832 for diameter 20000."""
    return Fraction(62832, 20000)


# polygon doubling ----------------------------------------------------------
#
# With S the side of the inscribed n-gon and r the radius,
#     S_2n^2 = S^2/4 + (r - sqrt(r^2 - S^2/4))^2.
# Multiplying through by (2n)^2 turns it into a recurrence on the perimeter
# P = n*S with D = 2r:
#     P_2n^2 = P^2 + (nD - sqrt((nD)^2 - P^2))^2.
# Only P^2 is needed to continue, so P^2 stays an exact integer and only
# the inner root (n times the apothem doubled) is rounded at each stage;
# one more root turns the final P^2 into a perimeter. In integer units of
# the diameter this keeps unit resolution on the perimeter, which the
# side-length form loses long before 384 sides.


@dataclass(frozen=True)
class DoublingState:
    sides: int
    perimeter_sq: int | Fraction
    apothem_root: int | None
    rounding: str | None


@dataclass(frozen=True)
class DoublingResult:
    diameter: int
    sides: int
    perimeter: int | HPDecimal
    ratio: Fraction | HPDecimal
    policy: tuple[str, ...] | None
    trace: tuple[DoublingState, ...] = field(repr=False)


def _normalize_policy(
    policy: RoundingMode | Sequence[RoundingMode], doublings: int
) -> tuple[str, ...]:
    if isinstance(policy, str):
        policy = (policy,) * (doublings + 1)
    policy = tuple(policy)
    if len(policy) != doublings + 1:
        raise ValueError(
            f"policy needs {doublings + 1} modes (one per stage plus the final root)"
        )
    for mode in policy:
        if mode not in ROUNDING_MODES:
            raise ValueError(f"unknown rounding mode {mode!r}")
    return policy


def _check_doubling_args(diameter: int, doublings: int) -> None:
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    if not 0 <= doublings <= MAX_DOUBLINGS:
        raise DomainError(f"doublings must be in 0..{MAX_DOUBLINGS}")


def polygon_doubling_int(
    diameter: int,
    doublings: int,
    policy: RoundingMode | Sequence[RoundingMode] = "floor",
) -> DoublingResult:
    """Integer doubling from the hexagon; one rounding mode per root.

    ``policy`` is a single mode or ``doublings + 1`` modes: one for the
    inner root at each stage and one for the final perimeter.
    """
    _check_doubling_args(diameter, doublings)
    if diameter % 2:
        raise DomainError("integer mode needs an even diameter (integral radius)")
    policy = _normalize_policy(policy, doublings)
    n = 6
    p_sq = (3 * diameter) ** 2
    trace = [DoublingState(n, p_sq, None, None)]
    for stage in range(doublings):
        nd = n * diameter
        root = isqrt(nd * nd - p_sq, policy[stage])
        p_sq += (nd - root) ** 2
        n *= 2
        trace.append(DoublingState(n, p_sq, root, policy[stage]))
    perimeter = isqrt(p_sq, policy[-1])
    return DoublingResult(
        diameter, n, perimeter, Fraction(perimeter, diameter), policy, tuple(trace)
    )


def polygon_doubling_hp(diameter: int, doublings: int, digits: int = 20) -> DoublingResult:
    """Doubling with certified bounds, reported to ``digits`` decimals.

    The same integer recurrence runs twice at a finer unit: once with every
    root rounded towards a lower bound and once towards an upper bound. The
    perimeter is increasing in the previous perimeter, so the two runs
    bracket the exact value.
    """
    _check_doubling_args(diameter, doublings)
    guard = 6
    while True:
        unit = 10 ** (digits + guard)
        d = diameter * unit
        n = 6
        lo = hi = (3 * d) ** 2
        trace = [DoublingState(n, Fraction(lo, unit * unit), None, None)]
        for _ in range(doublings):
            nd = n * d
            lo += (nd - isqrt(nd * nd - lo, "ceil")) ** 2
            hi += (nd - isqrt(nd * nd - hi, "floor")) ** 2
            n *= 2
            trace.append(DoublingState(n, Fraction(lo + hi, 2 * unit * unit), None, None))
        p_lo = Fraction(isqrt(lo, "floor"), unit)
        p_hi = Fraction(isqrt(hi, "ceil"), unit)
        perimeter = HPDecimal.from_interval(p_lo, p_hi, digits)
        ratio = HPDecimal.from_interval(p_lo / diameter, p_hi / diameter, digits)
        if perimeter.err_ulp <= 1 and ratio.err_ulp <= 1:
            return DoublingResult(diameter, n, perimeter, ratio, None, tuple(trace))
        guard += 6


def polygon_doubling(
    diameter_units: int,
    doublings: int,
    policy: RoundingMode | Sequence[RoundingMode] = "floor",
    exact_digits: int | None = None,
) -> DoublingResult:
    """Integer mode by default; high-precision mode when ``exact_digits`` is set."""
    if exact_digits is not None:
        return polygon_doubling_hp(diameter_units, doublings, exact_digits)
    return polygon_doubling_int(diameter_units, doublings, policy)


@dataclass(frozen=True)
class PolicySearchReport:
    diameter: int
    doublings: int
    target: int
    policies_tried: int
    outcomes: dict[int, int]
    witnesses: tuple[tuple[str, ...], ...]

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def summary(self) -> str:
        lines = [
            f"diameter {self.diameter}, {6 * 2**self.doublings} sides, "
            f"{self.policies_tried} rounding policies",
        ]
        for value, count in sorted(self.outcomes.items()):
            lines.append(f"  perimeter {value}: {count} policies")
        if self.witnesses:
            lines.append(f"{len(self.witnesses)} policies reach {self.target}, e.g.")
            for w in self.witnesses[:3]:
                lines.append("  " + ",".join(w))
        else:
            lines.append(f"no policy reaches {self.target}")
        return "\n".join(lines)


def policy_search(
    diameter: int = 20000,
    doublings: int = 6,
    target: int = 62832,
    modes: Sequence[RoundingMode] = ROUNDING_MODES,
) -> PolicySearchReport:
    """Try every per-root rounding schedule and tally the final perimeters."""
    outcomes: Counter[int] = Counter()
    witnesses = []
    tried = 0
    for policy in itertools.product(modes, repeat=doublings + 1):
        tried += 1
        result = polygon_doubling_int(diameter, doublings, policy)
        outcomes[result.perimeter] += 1
        if result.perimeter == target:
            witnesses.append(policy)
    return PolicySearchReport(
        diameter, doublings, target, tried, dict(outcomes), tuple(witnesses)
    )


# sine tables ---------------------------------------------------------------


@dataclass(frozen=True)
class SineTable:
    """Rsines at multiples of ``step_arcmin`` up to 90 degrees, radius R."""

    R: int
    step_arcmin: int
    rsines: tuple[int, ...]
    diffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.rsines) != len(self.diffs):
            raise ValueError("rsines and diffs differ in length")
        running = 0
        for value, diff in zip(self.rsines, self.diffs):
            running += diff
            if running != value:
                raise ValueError("diffs do not accumulate to rsines")

    @property
    def entries(self) -> int:
        return len(self.rsines)

    def angle(self, index: int) -> Fraction:
        """Angle in degrees of entry ``index`` (0-based)."""
        return Fraction((index + 1) * self.step_arcmin, 60)

    def rows(self) -> list[dict[str, int]]:
        return [
            {
                "index": i + 1,
                "arcmin": (i + 1) * self.step_arcmin,
                "rsine": value,
                "diff": diff,
            }
            for i, (value, diff) in enumerate(zip(self.rsines, self.diffs))
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["index", "arcmin", "rsine", "diff"], lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"R": self.R, "step_arcmin": self.step_arcmin, "rows": self.rows()},
            indent=2,
            ensure_ascii=False,
        ) + "\n"


def _rounded_rsine(R: int, theta: Fraction) -> int:
    exact = exact_sin(theta)
    if exact is not None:
        return evaluate(R * exact, 0).mantissa
    digits = len(str(R)) + 8
    while True:
        value = sin_oracle(theta, digits) * R
        m = value.certified_round(0)
        if m is not None:
            return m
        digits += 8


def sine_table(R: int, entries: int = 24) -> SineTable:
    """Nearest-integer Rsines at ``entries`` equal steps up to 90 degrees."""
    if R <= 0 or entries <= 0:
        raise DomainError("R and entries must be positive")
    if 5400 % entries:
        raise DomainError("90 degrees must split into a whole number of arc-minutes")
    step = 5400 // entries
    rsines = tuple(_rounded_rsine(R, Fraction(i * step, 60)) for i in range(1, entries + 1))
    diffs = tuple(b - a for a, b in zip((0,) + rsines, rsines))
    return SineTable(R, step, rsines, diffs)


def interpolate_rsine(table: SineTable, theta_deg: Fraction | int) -> Fraction:
    """Linear interpolation between table nodes (node 0 is Rsine 0 = 0)."""
    theta = Fraction(theta_deg)
    if not 0 <= theta <= 90:
        raise DomainError(f"angle {theta} outside [0, 90]")
    position = theta * 60 / table.step_arcmin
    i = int(position)
    if i >= table.entries:
        return Fraction(table.rsines[-1])
    base = table.rsines[i - 1] if i > 0 else 0
    return base + (position - i) * table.diffs[i]


def bhaskara1_sine(theta_deg: Fraction | int) -> Fraction:
    """4t(180 - t) / (40500 - t(180 - t)), t in degrees."""
    t = Fraction(theta_deg)
    if not 0 <= t <= 180:
        raise DomainError(f"angle {t} outside [0, 180]")
    u = t * (180 - t)
    return 4 * u / (40500 - u)


# Bhaskara II ----------------------------------------------------------------


def _arc_args(
    c: Number, d: Number, p: Number | None, digits: int
) -> tuple[Number, Number, Number]:
    c, d = (Fraction(v) if isinstance(v, int) else v for v in (c, d))
    if isinstance(c, HPDecimal) or isinstance(d, HPDecimal):
        ok = c.center > 0 if isinstance(c, HPDecimal) else c > 0
    else:
        ok = QuadSurd.of(c).sign() > 0 and QuadSurd.of(d - c).sign() >= 0
    if not ok:
        raise DomainError(f"chord {c} outside (0, d] for diameter {d}")
    if p is None:
        p = pi_hp(digits + 10) * d
    elif isinstance(p, int):
        p = Fraction(p)
    return c, d, p


def bhaskara2_arc(
    c: Number, d: Number, p: Number | None = None, digits: int = 30
) -> Number:
    """Arc length (p/2)(1 - sqrt(1 - 5c/(c + 4d))) for circumference p.

    ``p`` defaults to the oracle circumference pi*d. With exact c, d and p
    the result is exact.
    """
    c, d, p = _arc_args(c, d, p, digits)
    radicand = 1 - 5 * c / (c + 4 * d)
    if not isinstance(radicand, HPDecimal) and QuadSurd.of(radicand).sign() < 0:
        raise DomainError("negative radicand")
    factor = (1 - sqrt(radicand, digits + 10)) / 2
    result = mixed_mul(p, factor, digits + 10)
    return result.rescale(digits) if isinstance(result, HPDecimal) else QuadSurd.of(result)


def bhaskara2_arc_verse(
    c: Number, d: Number, p: Number | None = None, digits: int = 30
) -> Number:
    """The same rule in its unsimplified form, p/2 - sqrt(p^2/4 - 5p^2 c / (4(c + 4d)))."""
    c, d, p = _arc_args(c, d, p, digits)
    p_sq = p * p
    inner = p_sq / 4 - 5 * p_sq * c / (4 * (c + 4 * d))
    result = p / 2 - sqrt(inner, digits + 10)
    return result.rescale(digits) if isinstance(result, HPDecimal) else QuadSurd.of(result)
