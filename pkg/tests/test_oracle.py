from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from circlepi.errors import DomainError, InsufficientPrecisionError
from circlepi.exactnum import HPDecimal, QuadSurd
from circlepi.oracle import (
    digits_correct,
    exact_sin,
    pi_bounds,
    pi_hp,
    pi_oracle,
    relative_error,
    sin_oracle,
)



def mp_digits(value, digits):
    """Half-up rounding of an mpmath value at ``digits`` decimals, as an integer."""
    return int(mpmath.floor(value * mpmath.mpf(10) ** digits + mpmath.mpf(1) / 2))


def test_pi_small_renderings():
    assert str(pi_oracle(4)) == "3.1416"
    assert str(pi_oracle(12)) == "3.141592653590"
    assert str(pi_oracle(1)) == "3.1"


@pytest.mark.parametrize("digits", [1, 5, 17, 50, 123, 200])
def test_pi_oracle_matches_mpmath(digits):
    assert pi_oracle(digits).mantissa == mp_digits(mpmath.pi, digits)


def test_pi_oracle_bounds():
    with pytest.raises(DomainError):
        pi_oracle(0)
    with pytest.raises(DomainError):
        pi_oracle(201)
    # the uncapped form goes further
    assert pi_hp(240).mantissa == mp_digits(mpmath.pi, 240)


@pytest.mark.parametrize("scale", [10, 60, 150])
def test_two_arctangent_formulas_agree(scale):
    m_lo, m_hi = pi_bounds(scale, "machin")
    g_lo, g_hi = pi_bounds(scale, "gauss")
    exact = mpmath.pi * mpmath.mpf(10) ** scale
    for lo, hi in ((m_lo, m_hi), (g_lo, g_hi)):
        assert lo <= exact <= hi
        assert hi - lo <= 4
    assert pi_hp(scale, "machin") == pi_hp(scale, "gauss")


def test_unknown_formula():
    with pytest.raises(ValueError):
        pi_bounds(10, "leibniz")


def test_exact_sines():
    assert exact_sin(30) == Fraction(1, 2)
    assert exact_sin(150) == Fraction(1, 2)
    assert exact_sin(45) == QuadSurd(0, 1, 2, 2)
    assert exact_sin(120) == QuadSurd(0, 1, 3, 2)
    assert exact_sin(180) == 0
    assert exact_sin(20) is None


angles = st.fractions(min_value=0, max_value=180, max_denominator=1000)


@given(angles, st.integers(0, 40))
def test_sin_oracle_correctly_rounded(theta, digits):
    x = mpmath.mpf(theta.numerator) / theta.denominator * mpmath.pi / 180
    assert sin_oracle(theta, digits).mantissa == mp_digits(mpmath.sin(x), digits)


def test_sin_oracle_values():
    assert str(sin_oracle(Fraction(15, 4), 6)) == "0.065403"
    assert str(sin_oracle(90, 5)) == "1.00000"
    assert str(sin_oracle(Fraction(179, 2), 8)) == "0.99996192"
    with pytest.raises(DomainError):
        sin_oracle(181, 5)


def test_relative_error_sign_and_value():
    pi = pi_hp(30)
    assert str(relative_error(Fraction(16, 5), pi, 6)) == "0.018592"
    assert relative_error(Fraction(3), pi, 6).mantissa < 0
    assert str(relative_error(QuadSurd(0, 1, 10), pi, 6)) == "0.006584"


def test_relative_error_refuses_uncertified_digits():
    with pytest.raises(InsufficientPrecisionError):
        relative_error(Fraction(22, 7), pi_hp(3), 10)


def test_digits_correct():
    pi = pi_hp(40)
    assert digits_correct(Fraction(355, 113), pi) == 6
    assert digits_correct(Fraction(22, 7), pi) == 2
    assert digits_correct(Fraction(2_827_433_388_233, 900_000_000_000), pi) == 11
    assert digits_correct(Fraction(3), pi) == 0
    # +-1/2 ulp straddles a rounding boundary at the last place itself
    assert digits_correct(pi, pi) == 39
    # an uncertified last place stops the scan instead of guessing
    assert digits_correct(HPDecimal(31416, 4, Fraction(1, 2)), pi) == 3
    assert digits_correct(HPDecimal(31416, 4), pi) == 4
    assert digits_correct(Fraction(1, 3), Fraction(1, 3), max_digits=25) == 25
