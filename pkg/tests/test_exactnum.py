import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from circlepi.errors import DomainError, NotRepresentableError, RadicandMismatchError
from circlepi.exactnum import (
    HPDecimal,
    Order,
    QuadSurd,
    _split_square,
    evaluate,
    isqrt,
    isqrt_digitwise,
    parse_rational,
    round_half_up,
    sqrt,
    surd_cmp,
    surd_eval,
    to_decimal,
)


small = st.integers(-10**6, 10**6)
fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**4)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 17])


@st.composite
def surds(draw, k=None):
    k = draw(radicands) if k is None else k
    return QuadSurd(draw(small), draw(small), k, draw(st.integers(1, 10**4)))


def mp_value(x: QuadSurd):
    return (mpmath.mpf(x.a) + x.b * mpmath.sqrt(x.k)) / x.q


# integer square roots


def test_isqrt_exhaustive_to_a_million():
    r = 0
    for n in range(10**6 + 1):
        if (r + 1) * (r + 1) <= n:
            r += 1
        assert isqrt(n) == r
    assert isqrt(10**6) == 1000


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 15, 16, 17, 99, 10**11])
def test_isqrt_modes_bracket(n):
    lo, hi, near = isqrt(n, "floor"), isqrt(n, "ceil"), isqrt(n, "nearest")
    assert lo * lo <= n <= hi * hi
    assert hi - lo in (0, 1)
    assert near in (lo, hi)
    assert abs(near * near - n) == min(n - lo * lo, hi * hi - n)


def test_isqrt_rejects_negative_and_bad_mode():
    with pytest.raises(DomainError):
        isqrt(-1)
    with pytest.raises(ValueError):
        isqrt(10, "up")


@given(st.integers(0, 10**60))
def test_digitwise_agrees_with_isqrt(n):
    assert isqrt_digitwise(n) == isqrt(n)


@given(st.integers(0, 10**40))
def test_ceil_is_smallest_upper_root(n):
    c = isqrt(n, "ceil")
    assert c * c >= n and (c == 0 or (c - 1) ** 2 < n)


@given(st.integers(1, 10**7))
def test_split_square(n):
    s, k = _split_square(n)
    assert s * s * k == n
    for p in range(2, math.isqrt(k) + 1):
        assert k % (p * p) != 0


# parsing and rounding


@pytest.mark.parametrize(
    "text, value",
    [("3/4", Fraction(3, 4)), ("0.125", Fraction(1, 8)), ("-2", Fraction(-2)), (" 7 ", Fraction(7)),
     ("0.1", Fraction(1, 10))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "nan", "inf", "1.2.3", "x/3", "1/0"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_round_half_up_goes_away_from_zero():
    assert round_half_up(Fraction(5, 2)) == 3
    assert round_half_up(Fraction(-5, 2)) == -3
    assert round_half_up(Fraction(7, 3)) == 2


# quadratic surds


def test_normal_form():
    x = QuadSurd(4, 6, 8, -2)  # (4 + 6*2*sqrt 2)/(-2)
    assert (x.a, x.b, x.k, x.q) == (-2, -6, 2, 1)
    assert QuadSurd(3, 5, 9, 1) == 18
    assert QuadSurd(3, 0, 7, 6).k == 0
    assert hash(QuadSurd(1, 0, 0, 2)) == hash(Fraction(1, 2))


def test_rendering():
    assert str(QuadSurd(2, 1, 2, 6)) == "(2+√2)/6"
    assert str(QuadSurd(54, -36, 2)) == "54-36√2"
    assert QuadSurd(54, -36, 2).ascii() == "54-36*sqrt(2)"
    assert str(QuadSurd(0, 1, 10, 12)) == "√10/12"
    assert QuadSurd(0, -1, 10).ascii() == "-sqrt(10)"
    assert str(QuadSurd(5, 0, 0, 3)) == "5/3"


@given(surds(k=2), surds(k=2), surds(k=2))
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x != 0:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(surds())
def test_sign_and_floor_match_mpmath(x):
    v = mp_value(x)
    assert x.sign() == (v > 0) - (v < 0)
    assert math.floor(x) == int(mpmath.floor(v))
    assert math.ceil(x) == int(mpmath.ceil(v))


@given(surds(k=5), surds(k=5))
def test_comparison_matches_mpmath(x, y):
    assume(x != y)
    assert (x < y) == (mp_value(x) < mp_value(y))
    assert surd_cmp(x, y) == (Order.LESS if x < y else Order.GREATER)


def test_mixed_radicands_rejected():
    with pytest.raises(RadicandMismatchError):
        QuadSurd(0, 1, 2) + QuadSurd(0, 1, 3)
    # rationals mix with anything
    assert QuadSurd(0, 1, 2) + Fraction(1, 2) == QuadSurd(1, 2, 2, 2)


def test_sqrt_denests():
    assert QuadSurd.sqrt(QuadSurd(6, 2, 5)) == QuadSurd(1, 1, 5)
    assert QuadSurd.sqrt(QuadSurd(3, -2, 2)) == QuadSurd(-1, 1, 2)
    assert QuadSurd.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert QuadSurd.sqrt(8) == QuadSurd(0, 2, 2)
    with pytest.raises(NotRepresentableError):
        QuadSurd.sqrt(QuadSurd(2, 1, 2))
    with pytest.raises(DomainError):
        QuadSurd.sqrt(-1)


@given(surds(k=3))
def test_sqrt_of_square(x):
    assume(x.sign() > 0)
    assert QuadSurd.sqrt(x * x) == x


# decimals


@given(surds(), st.integers(0, 40))
def test_surd_eval_correctly_rounded(x, digits):
    d = surd_eval(x, digits)
    exact = mp_value(x) * mpmath.mpf(10) ** digits
    assert abs(d.mantissa - exact) <= 0.5


@given(fractions, st.integers(0, 30))
def test_to_decimal_exactness_flag(x, digits):
    d = to_decimal(x, digits)
    assert d.is_exact == (x * 10**digits == d.mantissa)
    assert abs(d.center - x) <= Fraction(1, 2 * 10**digits)


@given(fractions, fractions, st.integers(2, 25), st.sampled_from("+-*/"))
def test_interval_arithmetic_encloses(x, y, digits, op):
    # a divisor that rounds to zero has no certified quotient
    assume(op != "/" or abs(y) * 10**digits >= 1)
    apply = {
        "+": lambda u, v: u + v,
        "-": lambda u, v: u - v,
        "*": lambda u, v: u * v,
        "/": lambda u, v: u / v,
    }[op]
    exact = apply(x, y)
    lo, hi = apply(to_decimal(x, digits), to_decimal(y, digits)).interval()
    assert lo <= exact <= hi


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4), st.integers(0, 30))
def test_hp_sqrt_encloses(x, digits):
    r = to_decimal(x, digits).sqrt()
    lo, hi = r.interval()
    assert mpmath.mpf(lo.numerator) / lo.denominator <= mpmath.sqrt(
        mpmath.mpf(x.numerator) / x.denominator
    ) <= mpmath.mpf(hi.numerator) / hi.denominator


def test_hpdecimal_str_and_rescale():
    x = HPDecimal(-31416, 4)
    assert str(x) == "-3.1416"
    assert str(x.rescale(2)) == "-3.14"
    assert str(HPDecimal(5, 3)) == "0.005"
    assert x.rescale(6).mantissa == -3141600
    assert HPDecimal(125, 2, Fraction(1, 2)).certified_round(1) is None
    assert HPDecimal(124, 2, Fraction(1, 2)).certified_round(1) == 12


def test_sqrt_dispatch():
    assert sqrt(Fraction(1, 4)) == Fraction(1, 2)
    assert sqrt(10) == QuadSurd(0, 1, 10)
    nested = sqrt(QuadSurd(2, 1, 2), 20)
    assert isinstance(nested, HPDecimal)
    lo, hi = nested.interval()
    root = mpmath.sqrt(2 + mpmath.sqrt(2))
    assert mpmath.mpf(lo.numerator) / lo.denominator <= root <= mpmath.mpf(hi.numerator) / hi.denominator
    assert nested.err_ulp <= 1
    assert evaluate(QuadSurd(0, 1, 2), 7).mantissa == 14142136


def test_huge_radicand_stays_fast_and_consistent():
    # two primes above the trial-division range
    p, q = 1_000_000_007, 998_244_353
    x = QuadSurd(0, 1, p * p * q)  # k keeps p^2: too large to factor by trial division
    y = QuadSurd(0, p, q)
    assert x == y and hash(x) == hash(y)
    assert x - y == 0
    assert x * y == p * p * q
    with pytest.raises(RadicandMismatchError):
        x + QuadSurd(0, 1, p * q)
