"""Exact arithmetic kernel.

Three value types carry every number in the package:

* ``ExactRational`` -- an alias for :class:`fractions.Fraction`.
* :class:`QuadSurd` -- ``(a + b*sqrt(k)) / q`` over one radicand.
* :class:`HPDecimal` -- a scaled integer with a guaranteed absolute error
  bound, used wherever a value is only known to finite precision (pi, sines,
  nested radicals).

All three are immutable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from .errors import (
    DomainError,
    InsufficientPrecisionError,
    NotRepresentableError,
    RadicandMismatchError,
)

__all__ = [
    "ExactRational",
    "HPDecimal",
    "Order",
    "QuadSurd",
    "RoundingMode",
    "evaluate",
    "exact_sqrt",
    "isqrt",
    "isqrt_digitwise",
    "mixed_mul",
    "parse_rational",
    "round_half_up",
    "sqrt",
    "surd_cmp",
    "surd_eval",
    "to_decimal",
]

ExactRational = Fraction
RoundingMode = Literal["floor", "ceil", "nearest"]
ROUNDING_MODES: tuple[str, ...] = ("floor", "ceil", "nearest")

# err_ulp is stored rounded up to this granularity to keep the fractions small.
_ERR_GRAIN = 1000
# Extra digits used when a surd must be approximated inside HPDecimal arithmetic.
_SURD_GUARD = 10


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


# ---------------------------------------------------------------------------
# integers


def isqrt(n: int, mode: RoundingMode = "floor") -> int:
    """Integer square root with an explicit rounding contract.

    ``floor`` gives the largest r with r*r <= n, ``ceil`` the smallest r with
    r*r >= n, and ``nearest`` the r minimising |r*r - n| (ties go to the
    larger root, although integer inputs never produce a tie).
    """
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    r = math.isqrt(n)
    if mode == "floor" or r * r == n:
        if mode not in ROUNDING_MODES:
            raise ValueError(f"unknown rounding mode {mode!r}")
        return r
    if mode == "ceil":
        return r + 1
    if mode == "nearest":
        return r + 1 if (r + 1) ** 2 - n <= n - r * r else r
    raise ValueError(f"unknown rounding mode {mode!r}")


def isqrt_digitwise(n: int) -> int:
    """Floor square root by the schoolbook pairs-of-digits procedure.

    Kept separate from :func:`isqrt` so the two can check each other.
    """
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    digits = str(n)
    if len(digits) % 2:
        digits = "0" + digits
    root = remainder = 0
    for i in range(0, len(digits), 2):
        remainder = remainder * 100 + int(digits[i : i + 2])
        x = 9
        while (20 * root + x) * x > remainder:
            x -= 1
        remainder -= (20 * root + x) * x
        root = root * 10 + x
    return root


def _primes_below(n: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * n
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_TRIAL_PRIMES = _primes_below(20_000)


def _split_square(n: int) -> tuple[int, int]:
    """Return (s, k) with n == s*s*k.

    Trial division runs over primes below 20000. Whatever is left has only
    larger prime factors, so if it is below the cube of the last prime tried
    it is 1, a prime, a prime squared or a product of two distinct primes,
    and k is square-free. Past that, k may keep a square of a large prime;
    :meth:`QuadSurd._align` reconciles such radicands when they meet.
    """
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    s, k, m = 1, 1, n
    p = 1
    for p in _TRIAL_PRIMES:
        if p * p * p > m:
            break
        while m % (p * p) == 0:
            m //= p * p
            s *= p
        if m % p == 0:
            m //= p
            k *= p
    r = math.isqrt(m)
    if r * r == m:
        s *= r
    else:
        k *= m
    return s, k


def round_half_up(x: Fraction | int) -> int:
    """Round to the nearest integer, halves away from zero."""
    x = Fraction(x)
    if x < 0:
        return -math.floor(-x + Fraction(1, 2))
    return math.floor(x + Fraction(1, 2))


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer or a decimal string exactly. Never goes through float."""
    text = text.strip()
    if not text or any(c in text.lower() for c in "naif"):
        raise ValueError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


# ---------------------------------------------------------------------------
# quadratic surds


class QuadSurd:
    """The exact number ``(a + b*sqrt(k)) / q``.

    Normal form: k square-free (see :func:`_split_square` for the one
    exception with huge radicands); a rational value has ``b == k == 0``;
    ``q > 0`` and ``gcd(a, b, q) == 1``. Arithmetic works inside one field
    Q(sqrt k); rationals mix with anything.
    """

    __slots__ = ("a", "b", "k", "q")

    def __init__(self, a: int = 0, b: int = 0, k: int = 0, q: int = 1):
        if not all(isinstance(v, int) for v in (a, b, k, q)):
            raise TypeError("QuadSurd components must be integers")
        if q == 0:
            raise ZeroDivisionError("QuadSurd with zero denominator")
        if k < 0:
            raise DomainError("negative radicand")
        if q < 0:
            a, b, q = -a, -b, -q
        if b and k > 1:
            s, k = _split_square(k)
            b *= s
        if b == 0 or k <= 1:
            a += b * k
            b = k = 0
        g = math.gcd(a, b, q)
        self.a, self.b, self.k, self.q = a // g, b // g, k, q // g

    @classmethod
    def of(cls, x: "QuadSurd | Fraction | int") -> "QuadSurd":
        if isinstance(x, QuadSurd):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, Fraction):
            return cls(x.numerator, 0, 0, x.denominator)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadSurd")

    @classmethod
    def sqrt(cls, x: "QuadSurd | Fraction | int") -> "QuadSurd":
        """Exact square root; denests sqrt(A + B*sqrt k) when possible."""
        x = cls.of(x)
        if x.sign() < 0:
            raise DomainError(f"square root of negative value {x}")
        if x.is_rational:
            return cls(0, 1, x.a * x.q, x.q)
        # sqrt((a + b sqrt k)/q) = sqrt(aq + bq sqrt k)/q
        big_a, big_b = x.a * x.q, x.b * x.q
        disc = big_a * big_a - big_b * big_b * x.k
        root = math.isqrt(disc) if disc >= 0 else -1
        if root < 0 or root * root != disc:
            raise NotRepresentableError(f"sqrt({x}) is a nested radical")
        u = Fraction(big_a + root, 2)
        v = Fraction(big_a - root, 2)
        try:
            r = cls.sqrt(u) + (1 if big_b > 0 else -1) * cls.sqrt(v)
        except RadicandMismatchError as exc:
            raise NotRepresentableError(f"sqrt({x}) needs two radicands") from exc
        r = r / x.q
        assert r * r == x
        return r

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b:
            raise NotRepresentableError(f"{self} is irrational")
        return Fraction(self.a, self.q)

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.k, self.q)

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs; a*a != b*b*k because sqrt k is irrational
        return sa if self.a * self.a > self.b * self.b * self.k else sb

    def _align(self, other: "QuadSurd") -> tuple["QuadSurd", "QuadSurd"]:
        """Rewrite both operands over one radicand, or raise if their fields differ."""
        if not (self.b and other.b) or self.k == other.k:
            return self, other
        k1, k2 = self.k, other.k
        r = math.isqrt(k1 * k2)
        if r * r != k1 * k2:
            raise RadicandMismatchError(f"radicands {k1} and {k2} do not share a field")
        # k1*k2 square: with g = gcd, k1/g and k2/g are coprime squares
        g = math.gcd(k1, k2)
        u, v = math.isqrt(k1 // g), math.isqrt(k2 // g)
        return (
            QuadSurd(self.a, self.b * u, g, self.q),
            QuadSurd(other.a, other.b * v, g, other.q),
        )

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        try:
            o = QuadSurd.of(other)
        except TypeError:
            return NotImplemented
        x, o = self._align(o)
        return QuadSurd(x.a * o.q + o.a * x.q, x.b * o.q + o.b * x.q, x.k or o.k, x.q * o.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.k, self.q)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        try:
            o = QuadSurd.of(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QuadSurd.of(other)
        except TypeError:
            return NotImplemented
        x, o = self._align(o)
        k = x.k or o.k
        return QuadSurd(x.a * o.a + x.b * o.b * k, x.a * o.b + x.b * o.a, k, x.q * o.q)

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        norm = self.a * self.a - self.b * self.b * self.k
        if norm == 0:
            raise ZeroDivisionError("QuadSurd division by zero")
        return QuadSurd(self.q * self.a, -self.q * self.b, self.k, norm)

    def __truediv__(self, other):
        try:
            o = QuadSurd.of(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadSurd.of(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = QuadSurd(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    # comparison ------------------------------------------------------------

    def _key(self):
        return (self.a, self.b, self.k, self.q)

    def __eq__(self, other):
        try:
            o = QuadSurd.of(other)
        except TypeError:
            return NotImplemented
        if self._key() == o._key():
            return True
        if not (self.b and o.b):
            return False
        try:
            x, y = self._align(o)
        except RadicandMismatchError:
            return False
        return x._key() == y._key()

    def __hash__(self):
        # built from parts that survive _align, so equal values hash equal
        if self.b == 0:
            return hash(Fraction(self.a, self.q))
        return hash((Fraction(self.a, self.q), self.b > 0))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __floor__(self) -> int:
        if self.b == 0:
            return self.a // self.q
        # b*sqrt(k) is irrational, so it sits strictly between f and f+1
        f = math.isqrt(self.b * self.b * self.k)
        if self.b > 0:
            return (self.a + f) // self.q
        return (self.a - f - 1) // self.q

    def __ceil__(self) -> int:
        return -math.floor(-self)

    # rendering -------------------------------------------------------------

    def _render(self, root: str, times: str) -> str:
        if self.b == 0:
            return str(Fraction(self.a, self.q))
        mag = abs(self.b)
        term = root if mag == 1 else f"{mag}{times}{root}"
        if self.a == 0:
            num = ("-" if self.b < 0 else "") + term
            return num if self.q == 1 else f"{num}/{self.q}"
        num = f"{self.a}{'-' if self.b < 0 else '+'}{term}"
        return num if self.q == 1 else f"({num})/{self.q}"

    def __str__(self):
        return self._render(f"√{self.k}", "")

    def ascii(self) -> str:
        return self._render(f"sqrt({self.k})", "*")

    def __repr__(self):
        return f"QuadSurd({self.a}, {self.b}, {self.k}, {self.q})"


def surd_cmp(x: QuadSurd | Fraction | int, y: QuadSurd | Fraction | int) -> Order:
    """Exact three-way comparison; no floating point involved."""
    return Order((QuadSurd.of(x) - QuadSurd.of(y)).sign())


def exact_sqrt(x: QuadSurd | Fraction | int) -> QuadSurd:
    return QuadSurd.sqrt(x)


# ---------------------------------------------------------------------------
# high-precision decimals


def _ceil_err(err: Fraction) -> Fraction:
    return Fraction(math.ceil(err * _ERR_GRAIN), _ERR_GRAIN)


@dataclass(frozen=True)
class HPDecimal:
    """``mantissa * 10**-scale`` with |true value - that| <= err_ulp * 10**-scale.

    Arithmetic is interval arithmetic on the enclosing interval: the result
    takes the larger operand scale and an error bound that encloses every
    value consistent with the operands.
    """

    mantissa: int
    scale: int
    err_ulp: Fraction = Fraction(0)

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError("scale must be non-negative")
        if self.err_ulp < 0:
            raise ValueError("err_ulp must be non-negative")
        object.__setattr__(self, "err_ulp", Fraction(self.err_ulp))

    @classmethod
    def from_interval(
        cls, lo: Fraction, hi: Fraction, scale: int, center: Fraction | None = None
    ) -> "HPDecimal":
        if center is None:
            center = (lo + hi) / 2
        unit = 10**scale
        m = round_half_up(center * unit)
        err = max(hi * unit - m, m - lo * unit, 0)
        return cls(m, scale, _ceil_err(Fraction(err)))

    @property
    def center(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    @property
    def radius(self) -> Fraction:
        return self.err_ulp / 10**self.scale

    @property
    def is_exact(self) -> bool:
        return self.err_ulp == 0

    def interval(self) -> tuple[Fraction, Fraction]:
        c, r = self.center, self.radius
        return c - r, c + r

    def to_fraction(self) -> Fraction:
        return self.center

    def rescale(self, scale: int) -> "HPDecimal":
        """Re-express at another scale; rounding (half-up) when shrinking."""
        if scale >= self.scale:
            f = 10 ** (scale - self.scale)
            return HPDecimal(self.mantissa * f, scale, self.err_ulp * f)
        f = 10 ** (self.scale - scale)
        m = round_half_up(Fraction(self.mantissa, f))
        err = abs(Fraction(self.mantissa, f) - m) + self.err_ulp / f
        return HPDecimal(m, scale, _ceil_err(err))

    def certified_round(self, scale: int) -> int | None:
        """Mantissa of the half-up rounding at ``scale`` if every value in the
        error interval rounds the same way, else None."""
        lo, hi = self.interval()
        unit = 10**scale
        m_lo, m_hi = round_half_up(lo * unit), round_half_up(hi * unit)
        return m_lo if m_lo == m_hi else None

    def sign(self) -> int:
        """Certified sign; raises when the interval straddles zero."""
        lo, hi = self.interval()
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if lo == hi == 0:
            return 0
        raise InsufficientPrecisionError(f"sign of {self} is not certified")

    # interval arithmetic ---------------------------------------------------

    def _bounds(self, other) -> tuple[Fraction, Fraction, Fraction, int]:
        if isinstance(other, HPDecimal):
            lo, hi = other.interval()
            return lo, hi, other.center, other.scale
        if isinstance(other, (int, Fraction)):
            x = Fraction(other)
            return x, x, x, 0
        if isinstance(other, QuadSurd):
            if other.is_rational:
                x = other.to_fraction()
                return x, x, x, 0
            approx = surd_eval(other, self.scale + _SURD_GUARD)
            lo, hi = approx.interval()
            return lo, hi, approx.center, 0
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def _binary(self, other, op, swap=False):
        try:
            blo, bhi, bc, bscale = self._bounds(other)
        except TypeError:
            return NotImplemented
        alo, ahi = self.interval()
        ac = self.center
        if swap:
            alo, ahi, ac, blo, bhi, bc = blo, bhi, bc, alo, ahi, ac
        scale = max(self.scale, bscale)
        if op == "+":
            return HPDecimal.from_interval(alo + blo, ahi + bhi, scale, ac + bc)
        if op == "-":
            return HPDecimal.from_interval(alo - bhi, ahi - blo, scale, ac - bc)
        if op == "*":
            corners = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
            return HPDecimal.from_interval(min(corners), max(corners), scale, ac * bc)
        if op == "/":
            if blo <= 0 <= bhi:
                if blo == bhi == 0:
                    raise ZeroDivisionError("HPDecimal division by zero")
                raise InsufficientPrecisionError("divisor interval contains zero")
            corners = (alo / blo, alo / bhi, ahi / blo, ahi / bhi)
            return HPDecimal.from_interval(min(corners), max(corners), scale, ac / bc)
        raise AssertionError(op)

    def __add__(self, other):
        return self._binary(other, "+")

    def __radd__(self, other):
        return self._binary(other, "+", swap=True)

    def __sub__(self, other):
        return self._binary(other, "-")

    def __rsub__(self, other):
        return self._binary(other, "-", swap=True)

    def __mul__(self, other):
        return self._binary(other, "*")

    def __rmul__(self, other):
        return self._binary(other, "*", swap=True)

    def __truediv__(self, other):
        return self._binary(other, "/")

    def __rtruediv__(self, other):
        return self._binary(other, "/", swap=True)

    def __neg__(self):
        return HPDecimal(-self.mantissa, self.scale, self.err_ulp)

    def __abs__(self):
        return -self if self.mantissa < 0 else self

    def sqrt(self) -> "HPDecimal":
        lo, hi = self.interval()
        if hi < 0:
            raise DomainError(f"square root of negative value {self}")
        lo = max(lo, Fraction(0))
        work = self.scale + 3
        unit = 10**work

        def root(x: Fraction, mode: RoundingMode) -> Fraction:
            n = x * unit * unit
            n_int = math.floor(n) if mode == "floor" else math.ceil(n)
            return Fraction(isqrt(n_int, mode), unit)

        center = max(self.center, Fraction(0))
        return HPDecimal.from_interval(
            root(lo, "floor"), root(hi, "ceil"), self.scale, root(center, "nearest")
        )

    def __str__(self):
        sign = "-" if self.mantissa < 0 else ""
        m = abs(self.mantissa)
        if self.scale == 0:
            return f"{sign}{m}"
        whole, frac = divmod(m, 10**self.scale)
        return f"{sign}{whole}.{frac:0{self.scale}d}"

    def __repr__(self):
        return f"HPDecimal('{self}', err_ulp={self.err_ulp})"


def to_decimal(x: Fraction | int, digits: int) -> HPDecimal:
    """Correctly rounded (half-up) decimal of an exact rational."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    x = Fraction(x)
    scaled = x * 10**digits
    m = round_half_up(scaled)
    return HPDecimal(m, digits, Fraction(0) if scaled == m else Fraction(1, 2))


def surd_eval(x: QuadSurd | Fraction | int, digits: int) -> HPDecimal:
    """Correctly rounded decimal of a surd; the error is at most half an ulp."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    x = QuadSurd.of(x)
    if x.is_rational:
        return to_decimal(x.to_fraction(), digits)
    neg = x.sign() < 0
    mag = -x if neg else x
    m = math.floor(mag * 10**digits + Fraction(1, 2))
    return HPDecimal(-m if neg else m, digits, Fraction(1, 2))


Number = Union[int, Fraction, QuadSurd, HPDecimal]


def evaluate(x: Number, digits: int) -> HPDecimal:
    """Bring any supported number to an HPDecimal at ``digits``."""
    if isinstance(x, HPDecimal):
        return x.rescale(digits)
    if isinstance(x, QuadSurd):
        return surd_eval(x, digits)
    return to_decimal(x, digits)


def mixed_mul(x: Number, y: Number, digits: int) -> Number:
    """x * y, falling back to HPDecimal when two surds live in different fields."""
    try:
        return x * y
    except RadicandMismatchError:
        return evaluate(x, digits + _SURD_GUARD) * evaluate(y, digits + _SURD_GUARD)


def sqrt(x: Number, digits: int = 30) -> QuadSurd | HPDecimal:
    """Square root that stays exact when it can.

    Exact inputs give a :class:`QuadSurd` when the root lies in one
    quadratic field; otherwise (or for HPDecimal input) the root is
    evaluated with an error bound at ``digits``.
    """
    if isinstance(x, HPDecimal):
        return x.sqrt()
    try:
        return QuadSurd.sqrt(x)
    except NotRepresentableError:
        return evaluate(x, digits + _SURD_GUARD).sqrt().rescale(digits)
