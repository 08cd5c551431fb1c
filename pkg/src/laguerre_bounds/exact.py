"""Exact integer and rational formulas for Q_n(t) and L_n(t).

Q_n(t) = sum_k k! C(n,k)^2 (-t)^k is the Pade denominator of Euler's factorial
series and L_n(t) = sum_k C(n,k) (-t)^k / k! the Laguerre polynomial.  The two
are tied together by Q_n(t) = n! (-t)^n L_n(1/t).

Python ``int`` plays the role of the big integer and ``fractions.Fraction`` the
canonically reduced rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Tuple, Union

Number = Union[int, Fraction]

__all__ = [
    "QStream",
    "binomial",
    "factorial",
    "laguerre_at_one",
    "laguerre_direct",
    "laguerre_at_one_stream",
    "q_at_one_stream",
    "q_direct",
    "q_poly_stream",
]


def _check_index(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")


def factorial(n: int) -> int:
    _check_index(n)
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); rejects k > n rather than returning 0."""
    _check_index(n)
    _check_index(k, "k")
    if k > n:
        raise ValueError(f"binomial({n}, {k}): k exceeds n")
    k = min(k, n - k)
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


def _as_fraction(t: Number) -> Fraction:
    if isinstance(t, Fraction):
        return t
    if isinstance(t, int) and not isinstance(t, bool):
        return Fraction(t)
    raise TypeError(f"expected int or Fraction, got {type(t).__name__}")


def q_direct(n: int, t: Number) -> Number:
    """Evaluate Q_n(t) by its defining sum.

    With t = p/q the sum is accumulated over the integers
    k! C(n,k)^2 (-p)^k q^(n-k) and divided by q^n once at the end.  Each term
    comes from the previous one by the exact ratio (n-k)^2 (-p) / ((k+1) q),
    so only small-integer multiplications and divisions touch the big values.
    Returns an ``int`` when ``t`` is an ``int``.
    """
    _check_index(n)
    tf = _as_fraction(t)
    p, q = -tf.numerator, tf.denominator
    term = q**n
    total = term
    for k in range(n):
        term = term * (n - k) * (n - k) * p // ((k + 1) * q)
        total += term
    if isinstance(t, int):
        return total
    return Fraction(total, q**n)


class QStream:
    """Iterator over (n, Q_n(1)) driven by the three-term recurrence

        Q_{n+2}(1) = -2(n+1) Q_{n+1}(1) - (n+1)^2 Q_n(1).

    Only the current and previous values are held, so sweeping to large n
    never keeps more than two big integers alive.
    """

    __slots__ = ("n", "q_n", "q_n_minus_1", "n_max")

    def __init__(self, n_max: int):
        _check_index(n_max, "n_max")
        self.n_max = n_max
        self.n = -1
        self.q_n = None
        self.q_n_minus_1 = None

    def __iter__(self) -> "QStream":
        return self

    def advance(self) -> int:
        """Step to the next index and return its value."""
        n = self.n + 1
        if n == 0:
            self.q_n_minus_1, self.q_n = None, 1
        elif n == 1:
            self.q_n_minus_1, self.q_n = 1, 0
        else:
            m = n - 1  # recurrence is written for Q_{m+1} in terms of Q_m, Q_{m-1}
            self.q_n_minus_1, self.q_n = self.q_n, -2 * m * self.q_n - m * m * self.q_n_minus_1
        self.n = n
        return self.q_n

    def __next__(self) -> Tuple[int, int]:
        if self.n >= self.n_max:
            raise StopIteration
        value = self.advance()
        return self.n, value


def q_at_one_stream(n_max: int) -> QStream:
    """Yield (n, Q_n(1)) for n = 0..n_max via the recurrence."""
    return QStream(n_max)


def q_poly_stream(n_max: int, t: Number) -> Iterator[Tuple[int, Number]]:
    """Yield (n, Q_n(t)) for n = 0..n_max from

        Q_{n+2}(t) = (1 - (2n+3)t) Q_{n+1}(t) - (n+1)^2 t^2 Q_n(t).
    """
    _check_index(n_max, "n_max")
    tf = _as_fraction(t)
    integral = isinstance(t, int)
    t2 = tf * tf
    prev, cur = Fraction(1), 1 - tf
    yield 0, (1 if integral else prev)
    if n_max == 0:
        return
    yield 1, (int(cur) if integral else cur)
    for n in range(n_max - 1):
        prev, cur = cur, (1 - (2 * n + 3) * tf) * cur - (n + 1) ** 2 * t2 * prev
        yield n + 2, (int(cur) if integral else cur)


def laguerre_direct(n: int, t: Number) -> Fraction:
    """L_n(t) = sum_k C(n,k) (-t)^k / k!, exact.

    Accumulates the integers C(n,k) (n!/k!) (-p)^k q^(n-k) and divides by
    n! q^n at the end, for t = p/q.  Consecutive terms differ by the factor
    (n-k) (-p) / ((k+1)^2 q), and that division is exact.
    """
    _check_index(n)
    tf = _as_fraction(t)
    p, q = -tf.numerator, tf.denominator
    fact = factorial(n)
    term = fact * q**n
    total = term
    for k in range(n):
        term = term * (n - k) * p // ((k + 1) * (k + 1) * q)
        total += term
    return Fraction(total, fact * q**n)


def laguerre_at_one(n: int) -> Fraction:
    """L_n(1) = (-1)^n Q_n(1) / n!, using the Q recurrence."""
    _check_index(n)
    stream = QStream(n)
    q = 1
    for _, q in stream:
        pass
    return Fraction(-q if n % 2 else q, factorial(n))


def laguerre_at_one_stream(n_max: int) -> Iterator[Tuple[int, int, int]]:
    """Yield (n, Q_n(1), n!) with n! maintained incrementally.

    L_n(1) is (-1)^n Q_n(1) / n!; callers that only need comparisons can
    avoid building the Fraction.
    """
    fact = 1
    for n, q in QStream(n_max):
        if n:
            fact *= n
        yield n, q, fact
