"""Circle rules of the Vedic altar manuals.

Circling the square (three constructions), squaring the circle, the
four-term value of sqrt(2), the two early circumference rules and the
intersecting-circles perpendicular.

The constructions are built from their geometry in exact surd arithmetic;
closed forms such as ``side*(2+sqrt2)/6`` are what falls out, and the tests
check them against those forms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactnum import HPDecimal, QuadSurd, evaluate
from .oracle import pi_hp

__all__ = [
    "CirclingMethod",
    "ConstructionResult",
    "PerpendicularResult",
    "SQRT2_TERMS",
    "SQUARING_TERMS",
    "circle_from_square",
    "manava_circumference",
    "perpendicular_check",
    "sqrt2_sulva",
    "square_from_circle",
    "squaring_ratio",
    "vedic_circumference",
]


class CirclingMethod(enum.Enum):
    BAUDHAYANA = "baudhayana"
    MANAVA = "manava"
    MAITRAYANIYA = "maitrayaniya"


@dataclass(frozen=True)
class ConstructionResult:
    """Circle produced from a square of the given side.

    ``radius`` is None for the Manava construction, whose radius is a nested
    radical; ``radius_sq`` is always exact. ``implied_pi`` is a modern
    derived metric: the pi that would make the circle's area equal the
    square's. The texts give a procedure, not a value of pi.
    """

    method: CirclingMethod
    side: Fraction
    radius_sq: QuadSurd
    radius: QuadSurd | None
    radius_value: HPDecimal
    area_ratio: HPDecimal
    implied_pi: QuadSurd

    @property
    def implied_pi_value(self) -> HPDecimal:
        return evaluate(self.implied_pi, self.area_ratio.scale)


def _positive(x, name: str) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"{name} must be positive, got {x}")
    return x


def _baudhayana_radius(side: Fraction) -> QuadSurd:
    # half-diagonal from the centre, plus a third of what juts past the side
    half = QuadSurd.of(side / 2)
    half_diagonal = QuadSurd.sqrt(side * side / 2)
    return half + (half_diagonal - half) / 3


def _manava_radius_sq(side: Fraction) -> QuadSurd:
    # trisector x = side/6 meets the circumcircle at y = sqrt(R^2 - x^2);
    # mark a fifth of the part outside the square
    x = side / 6
    y_circle = QuadSurd.sqrt(side * side / 2 - x * x)
    half = side / 2
    y_mark = half + (y_circle - half) / 5
    return y_mark * y_mark + x * x


def circle_from_square(
    side: Fraction | int, method: CirclingMethod | str, digits: int = 15
) -> ConstructionResult:
    side = _positive(side, "side")
    method = CirclingMethod(method)
    if method is CirclingMethod.BAUDHAYANA:
        radius = _baudhayana_radius(side)
        radius_sq = radius * radius
    elif method is CirclingMethod.MANAVA:
        radius = None
        radius_sq = _manava_radius_sq(side)
    else:
        radius = QuadSurd.of(side * Fraction(9, 16))
        radius_sq = radius * radius
    implied_pi = side * side / radius_sq
    work = digits + 10
    pi = pi_hp(work)
    radius_value = (
        evaluate(radius, digits)
        if radius is not None
        else evaluate(radius_sq, work).sqrt().rescale(digits)
    )
    area_ratio = (pi * radius_sq / (side * side)).rescale(digits)
    return ConstructionResult(
        method, side, radius_sq, radius, radius_value, area_ratio, implied_pi
    )


SQUARING_TERMS: tuple[Fraction, ...] = (
    Fraction(7, 8),
    Fraction(1, 8 * 29),
    -Fraction(1, 8 * 29 * 6),
    Fraction(1, 8 * 29 * 6 * 8),
)


def squaring_ratio() -> Fraction:
    """Side of the square over diameter of the circle: 9785/11136."""
    return sum(SQUARING_TERMS, Fraction(0))


def squaring_ratio_text(unicode: bool = True) -> str:
    times = "·" if unicode else "*"
    minus = "−" if unicode else "-"
    return (
        f"7/8 + 1/(8{times}29) {minus} 1/(8{times}29{times}6)"
        f" + 1/(8{times}29{times}6{times}8)"
    )


def square_from_circle(diameter: Fraction | int | QuadSurd) -> Fraction | QuadSurd:
    """Side of the square equal in area to the circle of this diameter."""
    if isinstance(diameter, QuadSurd):
        if diameter.sign() <= 0:
            raise DomainError("diameter must be positive")
        return diameter * squaring_ratio()
    return _positive(diameter, "diameter") * squaring_ratio()


SQRT2_TERMS: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(1, 3),
    Fraction(1, 3 * 4),
    -Fraction(1, 3 * 4 * 34),
)


def sqrt2_sulva() -> Fraction:
    """1 + 1/3 + 1/(3*4) - 1/(3*4*34) = 577/408."""
    return sum(SQRT2_TERMS, Fraction(0))


def vedic_circumference(diameter: Fraction | int) -> Fraction:
    """Sacrificial-post pits: 1 pada across, 3 padas round."""
    return 3 * _positive(diameter, "diameter")


def manava_circumference(diameter: Fraction | int) -> Fraction:
    """A fifth of the diameter plus three diameters."""
    d = _positive(diameter, "diameter")
    return d / 5 + 3 * d


@dataclass(frozen=True)
class PerpendicularResult:
    upper: tuple[QuadSurd, QuadSurd]
    lower: tuple[QuadSurd, QuadSurd]
    on_both_circles: bool
    perpendicular: bool


def perpendicular_check(
    center_offset: Fraction | int, radius: Fraction | int | QuadSurd
) -> PerpendicularResult:
    """Intersect equal circles centred at (-offset, 0) and (offset, 0).

    ``radius`` may be a surd as long as its square is rational. The line
    through the two intersection points is checked, exactly, to meet the
    line of centres at a right angle.
    """
    e = _positive(center_offset, "center offset")
    r = QuadSurd.of(radius)
    r_sq = r * r
    if not r_sq.is_rational or r.sign() <= 0:
        raise DomainError("radius must be positive with a rational square")
    # subtracting the two circle equations leaves 4*e*x = 0
    x = QuadSurd(0)
    y_sq = r_sq - (x - e) ** 2
    if y_sq.sign() <= 0:
        raise DomainError(
            f"circles of radius {r} at distance {2 * e} are tangent or disjoint"
        )
    y = QuadSurd.sqrt(y_sq)
    upper, lower = (x, y), (x, -y)
    on_both = all(
        (px - cx) ** 2 + py**2 == r_sq for px, py in (upper, lower) for cx in (-e, e)
    )
    chord = (upper[0] - lower[0], upper[1] - lower[1])
    centres = (2 * e, 0)
    perpendicular = chord[0] * centres[0] + chord[1] * centres[1] == 0
    return PerpendicularResult(upper, lower, on_both, perpendicular)
