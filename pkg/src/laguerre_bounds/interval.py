"""Outward-rounded interval arithmetic over arbitrary-precision dyadic numbers.

Endpoints are exact dyadic rationals ``man * 2**exp`` backed by Python ints.
Every operation that cannot be carried out exactly rounds the lower endpoint
toward -inf and the upper endpoint toward +inf, so an output interval always
contains the exact result whenever the inputs contain theirs.

Addition, subtraction, negation and multiplication of dyadics are exact and
are exposed as operators on :class:`Interval`.  Anything that needs rounding
(division, square roots, exp, sin/cos, constants) takes a ``prec`` argument
giving the working mantissa length in bits.

The transcendental kernels work in fixed point with an explicit count of the
truncation error (in units of the last place) plus a bound on the discarded
Taylor tail, and hand back an interval padded by that count.
"""

from __future__ import annotations

import decimal
import enum
import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

__all__ = [
    "Dyadic",
    "Interval",
    "Ordering",
    "MIN_PREC",
    "arith",
    "compare_strict",
    "const_e",
    "const_ln2",
    "const_pi",
    "cos_enclosure",
    "exp_enclosure",
    "root4",
    "pow34",
    "sin_enclosure",
    "sincos_enclosure",
    "sqrt_enclosure",
]

MIN_PREC = 32


def _check_prec(prec: int) -> None:
    if prec < MIN_PREC:
        raise ValueError(f"precision must be at least {MIN_PREC} bits, got {prec}")


class Dyadic:
    """Exact value ``man * 2**exp`` kept with an odd mantissa (or zero)."""

    __slots__ = ("man", "exp")

    def __init__(self, man: int, exp: int = 0):
        if man == 0:
            exp = 0
        else:
            tz = (man & -man).bit_length() - 1
            if tz:
                man >>= tz
                exp += tz
        self.man = man
        self.exp = exp

    @classmethod
    def from_float(cls, x: float) -> "Dyadic":
        if not math.isfinite(x):
            raise ValueError(f"cannot represent {x!r} as a dyadic")
        num, den = x.as_integer_ratio()
        return cls(num, -(den.bit_length() - 1))

    @classmethod
    def coerce(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, float):
            return cls.from_float(x)
        if isinstance(x, Fraction) and x.denominator & (x.denominator - 1) == 0:
            return cls(x.numerator, -(x.denominator.bit_length() - 1))
        raise TypeError(f"{x!r} is not exactly representable as a dyadic")

    def to_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.man << self.exp)
        return Fraction(self.man, 1 << -self.exp)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __repr__(self) -> str:
        return f"Dyadic({self.man}, {self.exp})"

    def __str__(self) -> str:
        return repr(float(self))

    def __hash__(self) -> int:
        return hash((self.man, self.exp))

    def sign(self) -> int:
        return (self.man > 0) - (self.man < 0)

    def bit_length(self) -> int:
        """Number of bits in the mantissa."""
        return abs(self.man).bit_length()

    def magnitude(self) -> int:
        """Exponent e with 2**(e-1) <= |x| < 2**e; zero maps to a very negative value."""
        if self.man == 0:
            return -(1 << 62)
        return self.exp + abs(self.man).bit_length()

    # exact ring operations

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.man, self.exp)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.man), self.exp)

    def __add__(self, other) -> "Dyadic":
        other = Dyadic.coerce(other)
        if self.man == 0:
            return other
        if other.man == 0:
            return self
        if self.exp >= other.exp:
            return Dyadic((self.man << (self.exp - other.exp)) + other.man, other.exp)
        return Dyadic(self.man + (other.man << (other.exp - self.exp)), self.exp)

    __radd__ = __add__

    def __sub__(self, other) -> "Dyadic":
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other) -> "Dyadic":
        return Dyadic.coerce(other) - self

    def __mul__(self, other) -> "Dyadic":
        other = Dyadic.coerce(other)
        return Dyadic(self.man * other.man, self.exp + other.exp)

    __rmul__ = __mul__

    def ldexp(self, k: int) -> "Dyadic":
        return Dyadic(self.man, self.exp + k) if self.man else self

    def _cmp(self, other) -> int:
        if isinstance(other, Fraction):
            a = self.to_fraction()
            return (a > other) - (a < other)
        d = (self - other).man
        return (d > 0) - (d < 0)

    def __eq__(self, other) -> bool:
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    # directed rounding

    def round(self, prec: int, up: bool) -> "Dyadic":
        """Round to ``prec`` mantissa bits toward +inf (up) or -inf."""
        bl = abs(self.man).bit_length()
        if bl <= prec:
            return self
        shift = bl - prec
        m = self.man >> shift  # floor, also for negative mantissas
        if up and (m << shift) != self.man:
            m += 1
        return Dyadic(m, self.exp + shift)

    def floor_fixed(self, wp: int) -> int:
        """floor(x * 2**wp)."""
        e = self.exp + wp
        return self.man << e if e >= 0 else self.man >> -e

    def to_decimal_string(self, digits: int, up: bool) -> str:
        """Decimal string with ``digits`` significant digits, rounded outward."""
        return _fraction_to_decimal(self.to_fraction(), digits, up)


def _fraction_to_decimal(q: Fraction, digits: int, up: bool) -> str:
    ctx = decimal.Context(
        prec=digits,
        rounding=decimal.ROUND_CEILING if up else decimal.ROUND_FLOOR,
        Emax=decimal.MAX_EMAX,
        Emin=decimal.MIN_EMIN,
    )
    value = ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))
    return format(value, "E") if value else "0"


def _div_round(num: int, den: int, prec: int, up: bool) -> Dyadic:
    """num/den rounded to ``prec`` bits in the requested direction."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    if den < 0:
        num, den = -num, -den
    if num == 0:
        return Dyadic(0)
    k = prec + 2 - (abs(num).bit_length() - den.bit_length())
    if k >= 0:
        q, r = divmod(num << k, den)
    else:
        q, r = divmod(num, den << -k)
    if up and r:
        q += 1
    return Dyadic(q, -k).round(prec, up)


def _dyadic_div(a: Dyadic, b: Dyadic, prec: int, up: bool) -> Dyadic:
    # a/b = (a.man / b.man) * 2**(a.exp - b.exp)
    return _div_round(a.man, b.man, prec, up).ldexp(a.exp - b.exp)


IntervalLike = Union["Interval", Dyadic, int, float]


class Interval:
    """Closed interval [lo, hi] with dyadic endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Dyadic.coerce(lo)
        hi = lo if hi is None else Dyadic.coerce(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def coerce(cls, x: IntervalLike) -> "Interval":
        return x if isinstance(x, Interval) else cls(x)

    @classmethod
    def from_rational(cls, num: int, den: int, prec: int) -> "Interval":
        """Tightest ``prec``-bit enclosure of num/den."""
        return cls(_div_round(num, den, prec, False), _div_round(num, den, prec, True))

    @classmethod
    def from_fraction(cls, q, prec: int) -> "Interval":
        q = Fraction(q)
        if q.denominator & (q.denominator - 1) == 0:
            return cls(Dyadic.coerce(q))
        return cls.from_rational(q.numerator, q.denominator, prec)

    @classmethod
    def symmetric(cls, radius) -> "Interval":
        """[-radius, radius]."""
        r = abs(Dyadic.coerce(radius))
        return cls(-r, r)

    def __repr__(self) -> str:
        return f"Interval({float(self.lo)!r}, {float(self.hi)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    @property
    def width(self) -> Dyadic:
        return self.hi - self.lo

    @property
    def mid(self) -> Dyadic:
        return (self.lo + self.hi).ldexp(-1)

    @property
    def rad(self) -> Dyadic:
        return (self.hi - self.lo).ldexp(-1)

    def mag(self) -> Dyadic:
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, float):
            x = Dyadic.from_float(x)
        return self.lo <= x <= self.hi

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def overlaps(self, other: "Interval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def contains_zero(self) -> bool:
        return self.lo.man <= 0 <= self.hi.man

    def round(self, prec: int) -> "Interval":
        return Interval(self.lo.round(prec, False), self.hi.round(prec, True))

    def widen(self, radius) -> "Interval":
        r = abs(Dyadic.coerce(radius))
        return Interval(self.lo - r, self.hi + r)

    def ldexp(self, k: int) -> "Interval":
        return Interval(self.lo.ldexp(k), self.hi.ldexp(k))

    def clip(self, lo, hi) -> "Interval":
        lo, hi = Dyadic.coerce(lo), Dyadic.coerce(hi)
        return Interval(min(max(self.lo, lo), hi), max(min(self.hi, hi), lo))

    # exact operators

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> "Interval":
        return self

    def __abs__(self) -> "Interval":
        if self.lo.man >= 0:
            return self
        if self.hi.man <= 0:
            return -self
        return Interval(Dyadic(0), max(-self.lo, self.hi))

    def __add__(self, other: IntervalLike) -> "Interval":
        other = Interval.coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: IntervalLike) -> "Interval":
        other = Interval.coerce(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: IntervalLike) -> "Interval":
        return Interval.coerce(other) - self

    def __mul__(self, other: IntervalLike) -> "Interval":
        other = Interval.coerce(other)
        if other.lo == other.hi:
            c = other.lo
            a, b = self.lo * c, self.hi * c
            return Interval(a, b) if c.man >= 0 else Interval(b, a)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Interval":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are exact")
        if k == 0:
            return Interval(1)
        if k % 2 == 0:
            base = abs(self)
            return Interval(Dyadic(base.lo.man**k, base.lo.exp * k), Dyadic(base.hi.man**k, base.hi.exp * k))
        return Interval(Dyadic(self.lo.man**k, self.lo.exp * k), Dyadic(self.hi.man**k, self.hi.exp * k))

    # rounded operations

    def add(self, other: IntervalLike, prec: int) -> "Interval":
        return (self + other).round(prec)

    def sub(self, other: IntervalLike, prec: int) -> "Interval":
        return (self - other).round(prec)

    def mul(self, other: IntervalLike, prec: int) -> "Interval":
        return (self * other).round(prec)

    def div(self, other: IntervalLike, prec: int) -> "Interval":
        other = Interval.coerce(other)
        if other.contains_zero():
            raise ZeroDivisionError(f"division by an interval containing zero: {other!r}")
        # x/y is monotone in each argument away from y = 0, so the corners bound it
        los = [_dyadic_div(x, y, prec, False) for x in (self.lo, self.hi) for y in (other.lo, other.hi)]
        his = [_dyadic_div(x, y, prec, True) for x in (self.lo, self.hi) for y in (other.lo, other.hi)]
        return Interval(min(los), max(his))

    def __truediv__(self, other):
        raise TypeError("interval division needs a precision; use a.div(b, prec)")


def arith(op: str, a: IntervalLike, b: IntervalLike = None, prec: int = 128) -> Interval:
    """Dispatch ``op`` in {add, sub, mul, div, neg, abs} at ``prec`` bits."""
    _check_prec(prec)
    a = Interval.coerce(a)
    if op == "neg":
        return (-a).round(prec)
    if op == "abs":
        return abs(a).round(prec)
    b = Interval.coerce(b)
    if op == "add":
        return a.add(b, prec)
    if op == "sub":
        return a.sub(b, prec)
    if op == "mul":
        return a.mul(b, prec)
    if op == "div":
        return a.div(b, prec)
    raise ValueError(f"unknown operation {op!r}")


class Ordering(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    UNKNOWN = "Unknown"


def compare_strict(a: IntervalLike, b: IntervalLike) -> Ordering:
    a, b = Interval.coerce(a), Interval.coerce(b)
    if a.hi < b.lo:
        return Ordering.LESS
    if a.lo > b.hi:
        return Ordering.GREATER
    return Ordering.UNKNOWN


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def _guard(prec: int) -> int:
    return prec + 2 * prec.bit_length() + 16


def _fixed_interval(s: int, err: int, wp: int, prec: int) -> Interval:
    return Interval(Dyadic(s - err, -wp).round(prec, False), Dyadic(s + err, -wp).round(prec, True))


def _atan_inv_fixed(x: int, wp: int) -> Tuple[int, int]:
    """Fixed-point atan(1/x) and an error bound, both in units of 2**-wp."""
    x2 = x * x
    term = (1 << wp) // x
    total = term
    k = 0
    while term:
        k += 1
        term //= x2
        if k % 2:
            total -= term // (2 * k + 1)
        else:
            total += term // (2 * k + 1)
    # each summand is off by < 3 ulp; the omitted alternating tail is < 2 ulp
    return total, 3 * (k + 1) + 2


@lru_cache(maxsize=64)
def const_pi(prec: int) -> Interval:
    """Enclosure of pi via Machin's formula 16 atan(1/5) - 4 atan(1/239)."""
    _check_prec(prec)
    wp = _guard(prec)
    a, ea = _atan_inv_fixed(5, wp)
    b, eb = _atan_inv_fixed(239, wp)
    return _fixed_interval(16 * a - 4 * b, 16 * ea + 4 * eb, wp, prec)


@lru_cache(maxsize=64)
def const_e(prec: int) -> Interval:
    """Enclosure of e from sum 1/k!."""
    _check_prec(prec)
    wp = _guard(prec)
    term = 1 << wp
    total = term
    k = 0
    while term:
        k += 1
        term //= k
        total += term
    # truncation keeps every term low by < 2 ulp, and the tail from the
    # first vanishing term on is below 4 ulp, so e lies in [total, total + 2k + 4]
    lo = Dyadic(total, -wp).round(prec, False)
    hi = Dyadic(total + 2 * k + 4, -wp).round(prec, True)
    return Interval(lo, hi)


@lru_cache(maxsize=64)
def const_ln2(prec: int) -> Interval:
    """Enclosure of ln 2 = 2 atanh(1/3)."""
    _check_prec(prec)
    wp = _guard(prec)
    term = (1 << wp) // 3
    total = term
    k = 0
    while term:
        k += 1
        term //= 9
        total += term // (2 * k + 1)
    err = 3 * (k + 1) + 3
    return Interval(Dyadic(2 * total, -wp).round(prec, False), Dyadic(2 * (total + err), -wp).round(prec, True))


# ---------------------------------------------------------------------------
# square root
# ---------------------------------------------------------------------------


def _sqrt_dyadic(x: Dyadic, prec: int, up: bool) -> Dyadic:
    if x.man < 0:
        raise ValueError("square root of a negative number")
    if x.man == 0:
        return x
    s = max(-(x.exp // 2), (2 * prec + 4 - x.man.bit_length() - x.exp + 1) // 2)
    n = x.man << (2 * s + x.exp)
    root = math.isqrt(n)
    if up and root * root != n:
        root += 1
    return Dyadic(root, -s).round(prec, up)


def sqrt_enclosure(x: IntervalLike, prec: int) -> Interval:
    _check_prec(prec)
    x = Interval.coerce(x)
    if x.lo.man < 0:
        raise ValueError(f"sqrt of an interval with negative part: {x!r}")
    return Interval(_sqrt_dyadic(x.lo, prec, False), _sqrt_dyadic(x.hi, prec, True))


def root4(x: IntervalLike, prec: int) -> Interval:
    """x**(1/4) as sqrt(sqrt(x))."""
    wp = prec + 4
    return sqrt_enclosure(sqrt_enclosure(x, wp), wp).round(prec)


def pow34(x: IntervalLike, prec: int) -> Interval:
    """x**(3/4) as sqrt(x * sqrt(x))."""
    x = Interval.coerce(x)
    wp = prec + 4
    return sqrt_enclosure(x * sqrt_enclosure(x, wp), wp).round(prec)


# ---------------------------------------------------------------------------
# exp
# ---------------------------------------------------------------------------


def _exp_fixed(y: int, wp: int) -> Tuple[int, int]:
    """exp(y * 2**-wp) in fixed point for |y| <= 2**wp, with an ulp error bound."""
    one = 1 << wp
    total = one
    term = one
    j = 0
    while term:
        j += 1
        term = (term * y >> wp) // j
        total += term
    # each term carries < 4 ulp of error; the tail after the vanishing term
    # is geometric with ratio <= 1/2 on top of a term below 4 ulp
    return total, 4 * j + 8


def _exp_point(x: Dyadic, prec: int) -> Interval:
    if x.man == 0:
        return Interval(1)
    mag = x.magnitude()
    if mag > 40:
        raise OverflowError(f"exp argument too large: {x}")
    approx = float(x) if mag > -1000 else 0.0
    k = round(approx / math.log(2))
    wp = _guard(prec) + max(k.bit_length(), 0) + 4
    y = Interval(x) - const_ln2(wp) * k  # exact product; |y| <~ 0.35
    lo_fixed = y.lo.floor_fixed(wp)
    hi_fixed = y.hi.floor_fixed(wp) + 1
    s_lo, e_lo = _exp_fixed(lo_fixed, wp)
    s_hi, e_hi = _exp_fixed(hi_fixed, wp)
    lo = Dyadic(s_lo - e_lo, -wp).ldexp(k).round(prec, False)
    hi = Dyadic(s_hi + e_hi, -wp).ldexp(k).round(prec, True)
    if lo.man < 0:
        lo = Dyadic(0)
    return Interval(lo, hi)


def exp_enclosure(x: IntervalLike, prec: int) -> Interval:
    """Enclosure of exp over an interval; exp is increasing so the endpoints suffice."""
    _check_prec(prec)
    x = Interval.coerce(x)
    at_lo = _exp_point(x.lo, prec)
    if x.hi == x.lo:
        return at_lo
    return Interval(at_lo.lo, _exp_point(x.hi, prec).hi)


# ---------------------------------------------------------------------------
# sin / cos
# ---------------------------------------------------------------------------


def _sincos_fixed(y: int, wp: int) -> Tuple[int, int, int]:
    """Fixed-point (sin, cos) of y * 2**-wp for |y| <= 2**wp, plus an ulp bound."""
    y2 = y * y >> wp
    one = 1 << wp
    s = term_s = y
    c = term_c = one
    j = 0
    while term_s or term_c:
        j += 1
        term_s = -(term_s * y2 >> wp) // ((2 * j) * (2 * j + 1))
        term_c = -(term_c * y2 >> wp) // ((2 * j - 1) * (2 * j))
        s += term_s
        c += term_c
    # per-term truncation < 3 ulp, alternating tail < 3 ulp, input truncation 1 ulp
    return s, c, 3 * j + 8


def _sincos_point(x: Dyadic, prec: int) -> Tuple[Interval, Interval]:
    if x.man == 0:
        return Interval(0), Interval(1)
    # pi gets enough extra bits that k * pi/2 is still accurate to ~prec bits
    wp = _guard(prec) + max(0, x.magnitude())
    half_pi = const_pi(wp).ldexp(-1)
    k = round(x.to_fraction() / half_pi.mid.to_fraction())
    y = Interval(x) - half_pi * k
    ym = y.mid.round(wp + 8, False)
    s, c, err = _sincos_fixed(ym.floor_fixed(wp), wp)
    pad = y.rad + Dyadic(err, -wp) + (y.mid - ym)
    sin_y = Interval(Dyadic(s, -wp)).widen(pad)
    cos_y = Interval(Dyadic(c, -wp)).widen(pad)
    q = k % 4
    if q == 0:
        out = (sin_y, cos_y)
    elif q == 1:
        out = (cos_y, -sin_y)
    elif q == 2:
        out = (-sin_y, -cos_y)
    else:
        out = (-cos_y, sin_y)
    return tuple(v.clip(-1, 1).round(prec) for v in out)


def sincos_enclosure(x: IntervalLike, prec: int) -> Tuple[Interval, Interval]:
    """Enclosures of (sin x, cos x).

    The interval is handled through its midpoint: both functions are
    1-Lipschitz, so the point enclosures are widened by the radius.
    """
    _check_prec(prec)
    x = Interval.coerce(x)
    rad = x.rad
    if rad >= 4:
        return Interval(-1, 1), Interval(-1, 1)
    s, c = _sincos_point(x.mid, prec + 4)
    if rad.man:
        s, c = s.widen(rad), c.widen(rad)
    return s.clip(-1, 1).round(prec), c.clip(-1, 1).round(prec)


def sin_enclosure(x: IntervalLike, prec: int) -> Interval:
    return sincos_enclosure(x, prec)[0]


def cos_enclosure(x: IntervalLike, prec: int) -> Interval:
    return sincos_enclosure(x, prec)[1]
