import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from laguerre_bounds.interval import (
    Dyadic,
    Interval,
    Ordering,
    arith,
    compare_strict,
    const_e,
    const_ln2,
    const_pi,
    cos_enclosure,
    exp_enclosure,
    pow34,
    root4,
    sincos_enclosure,
    sqrt_enclosure,
)

import soundness


def mp_interval(iv):
    return (
        mpmath.mpf(iv.lo.man) * mpmath.mpf(2) ** iv.lo.exp,
        mpmath.mpf(iv.hi.man) * mpmath.mpf(2) ** iv.hi.exp,
    )


def assert_encloses(iv, value, prec=600):
    with mpmath.workprec(prec):
        lo, hi = mp_interval(iv)
        assert lo <= value() <= hi


# -- dyadic representation ----------------------------------------------------


def test_dyadic_canonical():
    d = Dyadic(12, 3)
    assert (d.man, d.exp) == (3, 5)
    assert Dyadic(0, 17).exp == 0
    assert Dyadic.from_float(0.375).to_fraction() == Fraction(3, 8)


def test_dyadic_rejects_non_dyadic_fraction():
    with pytest.raises((TypeError, ValueError)):
        Dyadic.coerce(Fraction(1, 3))


def test_dyadic_rounding_directions():
    x = Dyadic(0b1011011, -3)
    assert x.round(4, False) <= x <= x.round(4, True)
    assert x.round(4, True).bit_length() <= 4


def test_decimal_string_outward():
    third = Interval.from_rational(1, 3, 200)
    lo = Fraction(third.lo.to_decimal_string(25, False).replace("E", "e"))
    hi = Fraction(third.hi.to_decimal_string(25, True).replace("E", "e"))
    assert lo < Fraction(1, 3) < hi


# -- arithmetic ---------------------------------------------------------------


def test_arith_examples():
    assert arith("add", Interval(1), Interval(2), 64) == Interval(3)
    assert arith("mul", Interval(-1, 1), Interval(-1, 1), 64) == Interval(-1, 1)
    third = arith("div", Interval(1), Interval(3), 64)
    assert third.contains(Dyadic(0)) is False
    assert third.lo.to_fraction() <= Fraction(1, 3) <= third.hi.to_fraction()
    assert third.width <= Dyadic(1, -62)


def test_neg_abs():
    assert arith("neg", Interval(1, 2), prec=64) == Interval(-2, -1)
    assert arith("abs", Interval(-3, 2), prec=64) == Interval(0, 3)


def test_division_by_zero_interval():
    with pytest.raises(ZeroDivisionError):
        Interval(1).div(Interval(-1, 1), 64)


def test_unknown_operation():
    with pytest.raises(ValueError):
        arith("pow", Interval(1), Interval(2), 64)


def test_precision_floor():
    with pytest.raises(ValueError):
        arith("add", Interval(1), Interval(1), 16)


def test_true_division_refused():
    with pytest.raises(TypeError):
        Interval(1) / Interval(2)


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval(2, 1)


@settings(max_examples=300, deadline=None)
@given(
    a=st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6),
    b=st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6),
    prec=st.integers(32, 200),
)
def test_rational_arithmetic_contains_exact(a, b, prec):
    ia, ib = Interval.from_fraction(a, prec), Interval.from_fraction(b, prec)
    for op, exact in (("add", a + b), ("sub", a - b), ("mul", a * b)):
        r = arith(op, ia, ib, prec)
        assert r.lo.to_fraction() <= exact <= r.hi.to_fraction()
    if b:
        r = arith("div", ia, ib, prec)
        assert r.lo.to_fraction() <= a / b <= r.hi.to_fraction()


def test_randomized_refinement_containment():
    cases, failures = soundness.refinement_containment(2000, seed=99)
    assert cases == 2000 and failures == []


@settings(max_examples=200, deadline=None)
@given(man=st.integers(-(2**80), 2**80), exp=st.integers(-90, 4), prec=st.integers(32, 160))
def test_monotone_refinement(man, exp, prec):
    x = Dyadic(man, exp)
    for f in (
        lambda p: sqrt_enclosure(abs(Interval(x)), p),
        lambda p: sincos_enclosure(x, p)[0],
        lambda p: sincos_enclosure(x, p)[1],
        lambda p: Interval(x).div(Interval(3), p),
    ):
        coarse, fine = f(prec), f(2 * prec)
        assert fine.width <= coarse.width


@settings(max_examples=200, deadline=None)
@given(
    a=st.tuples(st.integers(-50, 50), st.integers(0, 20)),
    b=st.tuples(st.integers(-50, 50), st.integers(0, 20)),
)
def test_compare_strict_antisymmetric(a, b):
    x = Interval(a[0], a[0] + a[1])
    y = Interval(b[0], b[0] + b[1])
    forward, backward = compare_strict(x, y), compare_strict(y, x)
    flipped = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS, Ordering.UNKNOWN: Ordering.UNKNOWN}
    assert backward == flipped[forward]


def test_compare_strict_examples():
    assert compare_strict(Interval(1, 2), Interval(3, 4)) == Ordering.LESS
    assert compare_strict(Interval(1, 3), Interval(2, 4)) == Ordering.UNKNOWN
    assert compare_strict(Interval(5, 6), Interval(1, 2)) == Ordering.GREATER


# -- constants ----------------------------------------------------------------


@pytest.mark.parametrize("prec", [32, 64, 128, 512, 2048])
def test_constants_contain_reference(prec):
    assert_encloses(const_pi(prec), lambda: mpmath.pi, 4 * prec + 64)
    assert_encloses(const_e(prec), lambda: mpmath.e, 4 * prec + 64)
    assert_encloses(const_ln2(prec), lambda: mpmath.ln2, 4 * prec + 64)
    for c in (const_pi(prec), const_e(prec), const_ln2(prec)):
        assert c.width <= Dyadic(1, -prec + 3)


# -- elementary functions -----------------------------------------------------


def test_sqrt_examples():
    two = sqrt_enclosure(Interval(4), 128)
    assert two.contains(Dyadic(2))
    assert two.width <= Dyadic(1, -126)
    root2 = sqrt_enclosure(Interval(2), 128)
    assert_encloses(root2, lambda: mpmath.sqrt(2))
    assert root2.lo < Dyadic.from_float(1.41421357) and root2.hi > Dyadic.from_float(1.41421356)
    squared = root2 * root2
    assert squared.contains(Dyadic(2))


def test_fractional_powers():
    assert pow34(10**4, 128).contains(Dyadic(1000))
    assert root4(10**4, 128).contains(Dyadic(10))
    assert_encloses(pow34(10001, 128), lambda: mpmath.mpf(10001) ** mpmath.mpf(0.75))


def test_exp_examples():
    one = exp_enclosure(Interval(0), 128)
    assert one.contains(Dyadic(1)) and one.width <= Dyadic(1, -128)
    e = exp_enclosure(Interval(1), 128)
    assert e.overlaps(const_e(128))
    assert_encloses(e, lambda: mpmath.e)
    inv = exp_enclosure(Interval(-2), 128)
    assert_encloses(inv, lambda: mpmath.exp(-2))
    assert abs(float(inv.mid) - 0.135335) < 1e-6
    # reciprocal of the exp(2) enclosure must overlap
    assert inv.overlaps(Interval(1).div(exp_enclosure(Interval(2), 128), 128))


def test_exp_interval_argument():
    r = exp_enclosure(Interval(Dyadic(-1), Dyadic(1)), 96)
    assert_encloses(r, lambda: mpmath.exp(-1))
    assert_encloses(r, lambda: mpmath.exp(1))


def test_exp_overflow_guard():
    with pytest.raises(OverflowError):
        exp_enclosure(Interval(2**50), 64)


def test_sincos_examples():
    s, c = sincos_enclosure(Interval(0), 128)
    assert s.contains(Dyadic(0)) and c.contains(Dyadic(1))
    half_pi = const_pi(128).ldexp(-1)
    s, c = sincos_enclosure(half_pi, 128)
    assert s.contains(Dyadic(1)) and c.contains(Dyadic(0))
    assert s.width <= Dyadic(1, -122) and c.width <= Dyadic(1, -122)


def test_sincos_at_bessel_argument():
    # 2r for n = 10^4
    x = sqrt_enclosure(10001, 160).ldexp(1)
    s, c = sincos_enclosure(x, 128)
    assert (s * s + c * c).contains(Dyadic(1))
    assert_encloses(c, lambda: mpmath.cos(2 * mpmath.sqrt(10001)))


def test_pythagorean_identity_large_arguments():
    assert soundness.pythagorean_failures(count=100, bound=10**6) == []


def test_wide_argument_gives_full_range():
    assert cos_enclosure(Interval(0, 100), 64) == Interval(-1, 1)


@settings(max_examples=100, deadline=None)
@given(x=st.floats(-1e6, 1e6, allow_nan=False), prec=st.sampled_from([64, 128, 256]))
def test_sincos_matches_mpmath(x, prec):
    s, c = sincos_enclosure(Dyadic.from_float(x), prec)
    assert_encloses(s, lambda: mpmath.sin(mpmath.mpf(x)), 4 * prec + 100)
    assert_encloses(c, lambda: mpmath.cos(mpmath.mpf(x)), 4 * prec + 100)


@settings(max_examples=100, deadline=None)
@given(x=st.floats(-30, 30, allow_nan=False), prec=st.sampled_from([64, 128, 256]))
def test_exp_matches_mpmath(x, prec):
    r = exp_enclosure(Dyadic.from_float(x), prec)
    assert_encloses(r, lambda: mpmath.exp(mpmath.mpf(x)), 4 * prec + 100)
    assert r.width <= r.hi * Dyadic(1, -prec + 4)


def test_float_agreement_sample():
    rng = random.Random(3)
    for _ in range(200):
        x = rng.uniform(0, 1e4)
        assert abs(float(sqrt_enclosure(Dyadic.from_float(x), 64).mid) - math.sqrt(x)) < 1e-9 * max(1, math.sqrt(x))
