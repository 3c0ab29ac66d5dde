"""Jaina chord, arc and segment rules, all with sqrt(10) standing in for pi.

Lengths may be exact (int, Fraction, QuadSurd) or HPDecimal. Exact inputs
give exact QuadSurd results whenever the answer lies in one quadratic
field; otherwise the result is an HPDecimal at ``digits``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InsufficientPrecisionError
from .exactnum import HPDecimal, Number, QuadSurd, isqrt, mixed_mul, sqrt

__all__ = [
    "SQRT10",
    "SegmentSpec",
    "arc_length_jaina",
    "area_from_circumference",
    "arrow_from_chord",
    "chord_from_arrow",
    "jambudvipa_circumference",
    "segment_area_mahavira",
    "segment_area_sridhara",
    "virasena_circumference",
]

SQRT10 = QuadSurd(0, 1, 10)
DEFAULT_DIGITS = 30


def _sign(x: Number) -> int:
    if isinstance(x, HPDecimal):
        try:
            return x.sign()
        except InsufficientPrecisionError:
            return 0
    return QuadSurd.of(x).sign()


def _finish(x: Number, digits: int) -> Number:
    if isinstance(x, HPDecimal):
        return x.rescale(digits)
    return QuadSurd.of(x)


def _check_pair(c: Number, h: Number) -> None:
    # a chord/arrow pair of a minor segment: 0 <= 2h <= c (c = 0 only with h = 0)
    if _sign(c) < 0 or _sign(h) < 0:
        raise DomainError("chord and arrow must be non-negative")
    if _sign(c - 2 * h) < 0:
        raise DomainError("arrow exceeds half the chord: not a minor segment")
    if _sign(c) == 0 and _sign(h) > 0:
        raise DomainError("zero chord with non-zero arrow")


def chord_from_arrow(h: Number, d: Number, digits: int = DEFAULT_DIGITS) -> Number:
    """c = sqrt(4h(d - h)) for an arrow 0 < h <= d/2."""
    if _sign(h) <= 0 or _sign(d - 2 * h) < 0:
        raise DomainError(f"arrow {h} outside (0, d/2] for diameter {d}")
    return _finish(sqrt(4 * h * (d - h), digits), digits)


def arrow_from_chord(c: Number, d: Number, digits: int = DEFAULT_DIGITS) -> Number:
    """Minor-segment arrow h = (d - sqrt(d^2 - c^2)) / 2 for 0 < c <= d."""
    if _sign(c) <= 0 or _sign(d - c) < 0:
        raise DomainError(f"chord {c} outside (0, d] for diameter {d}")
    c_sq = mixed_mul(c, c, digits)
    return _finish((d - sqrt(d * d - c_sq, digits)) / 2, digits)


@dataclass(frozen=True)
class SegmentSpec:
    """Diameter, chord and arrow of a minor circular segment, with c^2 = 4h(d-h)."""

    d: Number
    c: Number
    h: Number

    def __post_init__(self):
        if _sign(self.d) <= 0:
            raise DomainError("diameter must be positive")
        _check_pair(self.c, self.h)
        if _sign(self.d - 2 * self.h) < 0:
            raise DomainError("arrow exceeds the radius")
        exact = not any(isinstance(v, HPDecimal) for v in (self.d, self.c, self.h))
        if exact and self.c * self.c != 4 * self.h * (self.d - self.h):
            raise DomainError("inconsistent segment: c^2 != 4h(d - h)")

    @classmethod
    def from_arrow(cls, h: Number, d: Number) -> "SegmentSpec":
        return cls(d, chord_from_arrow(h, d), h)

    @classmethod
    def from_chord(cls, c: Number, d: Number) -> "SegmentSpec":
        return cls(d, c, arrow_from_chord(c, d))

    @classmethod
    def from_central_angle(cls, theta_deg: Fraction | int, d: Number = 2) -> "SegmentSpec":
        """Segment cut off by a chord subtending ``theta_deg`` at the centre."""
        from .oracle import exact_sin, sin_oracle

        theta = Fraction(theta_deg)
        if not 0 < theta <= 180:
            raise DomainError(f"central angle {theta} outside (0, 180]")
        half_sin = exact_sin(theta / 2)
        half_cos = exact_sin(90 - theta / 2)
        if half_sin is None or half_cos is None:
            half_sin = sin_oracle(theta / 2, DEFAULT_DIGITS + 10)
            half_cos = sin_oracle(90 - theta / 2, DEFAULT_DIGITS + 10)
        r = Fraction(d, 2) if isinstance(d, int) else d / 2
        return cls(d, mixed_mul(d, half_sin, DEFAULT_DIGITS), r - mixed_mul(r, half_cos, DEFAULT_DIGITS))


def arc_length_jaina(c: Number, h: Number, digits: int = DEFAULT_DIGITS) -> Number:
    """Minor arc a = sqrt(6h^2 + c^2)."""
    _check_pair(c, h)
    radicand = 6 * mixed_mul(h, h, digits) + mixed_mul(c, c, digits)
    return _finish(sqrt(radicand, digits), digits)


def segment_area_mahavira(c: Number, h: Number, digits: int = DEFAULT_DIGITS) -> Number:
    """Segment area sqrt(10)/4 * c * h."""
    _check_pair(c, h)
    return _finish(mixed_mul(SQRT10 / 4, mixed_mul(c, h, digits), digits), digits)


def segment_area_sridhara(c: Number, h: Number, digits: int = DEFAULT_DIGITS) -> Number:
    """Segment area sqrt(10)/3 * h(c + h)/2."""
    _check_pair(c, h)
    return _finish(mixed_mul(SQRT10 / 6, mixed_mul(h, c + h, digits), digits), digits)


def area_from_circumference(circ: Number, d: Number, digits: int = DEFAULT_DIGITS) -> Number:
    """A fourth of circumference times diameter."""
    if _sign(circ) <= 0 or _sign(d) <= 0:
        raise DomainError("circumference and diameter must be positive")
    return _finish(mixed_mul(circ, d, digits) / 4, digits)


def jambudvipa_circumference(d_yojana: int = 100_000) -> int:
    """sqrt(10) * d carried out in integers: floor(sqrt(10 d^2))."""
    if d_yojana <= 0:
        raise DomainError("diameter must be positive")
    return isqrt(10 * d_yojana * d_yojana, "floor")


def virasena_circumference(d: Fraction | int, literal: bool = False) -> Fraction:
    """Virasena's circumference rule.

    Default reading: 3 + 16/113 = 355/113 times the diameter. ``literal``
    keeps the verse as worded, (16d + 16)/113 + 3d, which is not even
    proportional to d.
    """
    d = Fraction(d)
    if d <= 0:
        raise DomainError("diameter must be positive")
    if literal:
        return (16 * d + 16) / 113 + 3 * d
    return Fraction(355, 113) * d
