"""Reference values for pi and sine, and the error metrics built on them.

Nothing here borrows from the historical methods under test: pi comes
from arctangent identities summed in fixed-point integers with an explicit
truncation/rounding budget, and sine from its Taylor series with a tracked
remainder.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import DomainError, InsufficientPrecisionError
from .exactnum import HPDecimal, Number, QuadSurd, evaluate, round_half_up

__all__ = [
    "PI_FORMULAS",
    "digits_correct",
    "exact_sin",
    "pi_bounds",
    "pi_hp",
    "pi_oracle",
    "relative_error",
    "sin_oracle",
]

MAX_PI_DIGITS = 200

# pi as an integer combination of arctan(1/m)
PI_FORMULAS: dict[str, tuple[tuple[int, int], ...]] = {
    "machin": ((16, 5), (-4, 239)),
    "gauss": ((48, 18), (32, 57), (-20, 239)),
}


def _arctan_inv(m: int, unit: int) -> tuple[int, int]:
    """arctan(1/m) * unit in fixed point, plus a bound on its absolute error.

    Powers are produced by repeated floor division (which equals a single
    floor), and each quotient by 2j+1 floors once more, so every term is off
    by less than 2. The first omitted term is below one unit.
    """
    m2 = m * m
    power = unit // m
    total = power
    j = 0
    while power:
        j += 1
        power //= m2
        term = power // (2 * j + 1)
        total += -term if j % 2 else term
    return total, 2 * (j + 1) + 1


@functools.lru_cache(maxsize=64)
def pi_bounds(scale: int, formula: str = "machin") -> tuple[int, int]:
    """Integers lo, hi with lo <= pi * 10**scale <= hi."""
    try:
        terms = PI_FORMULAS[formula]
    except KeyError:
        raise ValueError(f"unknown pi formula {formula!r}") from None
    guard = 6
    unit = 10 ** (scale + guard)
    value = err = 0
    for coeff, m in terms:
        t, e = _arctan_inv(m, unit)
        value += coeff * t
        err += abs(coeff) * e
    shrink = 10**guard
    return (value - err) // shrink, -((-(value + err)) // shrink)


def _certified(lo: Fraction, hi: Fraction, digits: int) -> int | None:
    unit = 10**digits
    a, b = round_half_up(lo * unit), round_half_up(hi * unit)
    return a if a == b else None


def pi_hp(digits: int, formula: str = "machin") -> HPDecimal:
    """Correctly rounded pi at any precision (no cap)."""
    guard = 8
    while True:
        lo, hi = pi_bounds(digits + guard, formula)
        unit = 10 ** (digits + guard)
        m = _certified(Fraction(lo, unit), Fraction(hi, unit), digits)
        if m is not None:
            return HPDecimal(m, digits, Fraction(1, 2))
        guard += 8


def pi_oracle(digits: int) -> HPDecimal:
    """pi rounded half-up to ``digits`` decimals (1 <= digits <= 200)."""
    if not 1 <= digits <= MAX_PI_DIGITS:
        raise DomainError(f"digits must be in 1..{MAX_PI_DIGITS}, got {digits}")
    return pi_hp(digits)


# sine ----------------------------------------------------------------------

_EXACT_SIN = {
    Fraction(0): QuadSurd(0),
    Fraction(30): QuadSurd(1, 0, 0, 2),
    Fraction(45): QuadSurd(0, 1, 2, 2),
    Fraction(60): QuadSurd(0, 1, 3, 2),
    Fraction(90): QuadSurd(1),
}


def exact_sin(theta_deg: Fraction | int) -> QuadSurd | None:
    """sin of a multiple of 30 or 45 degrees in [0, 180] as an exact surd."""
    theta = Fraction(theta_deg)
    if not 0 <= theta <= 180:
        return None
    return _EXACT_SIN.get(min(theta, 180 - theta))


def _sin_fixed(x: int, unit: int) -> tuple[int, int]:
    """sin(x/unit) * unit in fixed point and an error bound, for 0 <= x/unit <= 2.

    Term k+1 is floor(term_k * x^2 / (unit^2 (2k)(2k+1))); the multiplier is
    below one, so the error of term k is at most k.
    """
    x2 = x * x
    u2 = unit * unit
    term = total = x
    k = 0
    while term:
        k += 1
        term = term * x2 // (u2 * (2 * k) * (2 * k + 1))
        total += -term if k % 2 else term
    return total, k * (k + 1) // 2 + k + 1


def sin_oracle(theta_deg: Fraction | int, digits: int) -> HPDecimal:
    """sin of an angle in degrees, correctly rounded to ``digits`` decimals."""
    theta = Fraction(theta_deg)
    if not 0 <= theta <= 180:
        raise DomainError(f"angle {theta} outside [0, 180] degrees")
    if digits < 0:
        raise ValueError("digits must be non-negative")
    exact = exact_sin(theta)
    if exact is not None and exact.is_rational:
        return evaluate(exact, digits)
    reduced = min(theta, 180 - theta)
    guard = 8
    while True:
        scale = digits + guard
        unit = 10**scale
        pi_lo, pi_hi = pi_bounds(scale + 2)
        # x = reduced * pi / 180, bracketed in fixed point at `scale`
        x_lo = math.floor(reduced * pi_lo / 180 / 100)
        x_hi = math.ceil(reduced * pi_hi / 180 / 100)
        s_lo, e_lo = _sin_fixed(x_lo, unit)
        s_hi, e_hi = _sin_fixed(x_hi, unit)
        upper = s_hi + e_hi
        if x_hi * 200 >= pi_lo:
            # bracket reaches past 90 degrees, where sine stops increasing
            upper = max(upper, unit)
        m = _certified(Fraction(s_lo - e_lo, unit), Fraction(upper, unit), digits)
        if m is not None:
            return HPDecimal(m, digits, Fraction(1, 2))
        guard += 8


# metrics -------------------------------------------------------------------


def relative_error(
    approx: Number, reference: Number, digits: int | None = None
) -> HPDecimal:
    """Signed (approx - reference) / reference; positive means overestimate.

    Rendered at ``digits`` decimals (default: the smaller operand scale).
    Raises InsufficientPrecisionError if the operand error bounds do not pin
    the result to within one unit in the last place.
    """
    if digits is None:
        scales = [v.scale for v in (approx, reference) if isinstance(v, HPDecimal)]
        digits = min(scales) if scales else 15
    work = digits + 10
    a = approx if isinstance(approx, HPDecimal) else evaluate(approx, work)
    r = reference if isinstance(reference, HPDecimal) else evaluate(reference, work)
    if r.mantissa == 0 and r.is_exact:
        raise ZeroDivisionError("relative error against a zero reference")
    try:
        ratio = (a / r).rescale(max(a.scale, r.scale, work))
    except InsufficientPrecisionError as exc:
        raise InsufficientPrecisionError("reference is not certified non-zero") from exc
    result = (ratio - 1).rescale(digits)
    if result.err_ulp > 1:
        raise InsufficientPrecisionError(
            f"relative error not certified to {digits} digits (err {result.err_ulp} ulp)"
        )
    return result


def digits_correct(approx: Number, reference: Number, max_digits: int | None = None) -> int:
    """Number of decimals to which two values agree when both are rounded.

    Scans k = 0, 1, ...; stops at the first k where the certified half-up
    roundings differ (returning k - 1) or where either rounding can no
    longer be certified (returning the last certified k). Exact rationals
    and surds are evaluated on demand, so their digits never run out.
    """
    if max_digits is None:
        scales = [v.scale for v in (approx, reference) if isinstance(v, HPDecimal)]
        max_digits = min(scales) if scales else 50
    a_fixed = approx if isinstance(approx, HPDecimal) else evaluate(approx, max_digits + 10)
    r_fixed = (
        reference if isinstance(reference, HPDecimal) else evaluate(reference, max_digits + 10)
    )
    best = 0
    for k in range(max_digits + 1):
        ma = a_fixed.certified_round(k)
        mr = r_fixed.certified_round(k)
        if ma is None or mr is None:
            if k == 0:
                raise InsufficientPrecisionError("no digit can be certified")
            break
        if ma != mr:
            break
        best = k
    return best
