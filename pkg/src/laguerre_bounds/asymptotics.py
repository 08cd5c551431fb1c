"""Explicit asymptotics of L_n(1) and its certified error budget.

The main term is

    M(n) = sqrt(e/pi) * cos(2 sqrt(n) - pi/4) / n^(1/4),

and the distance |L_n(1) - M(n)| is bounded for n >= 10^4 by seven closed-form
majorants E2..E8.  The analysis passes through J_0(2r), J_1(2r) and J_3(2r)
with r = sqrt(n+1); those are enclosed here with Hankel's P/Q expansion,
truncated after a few terms with the remainder carried as a symmetric
interval (the Theta factors, each known only to satisfy |Theta| <= 1).

Two floating-point quadrature oracles (the Bessel integral and the contour
integral for L_n(1)) are included for cross-checking.  They are not rigorous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Tuple

import numpy as np

from .interval import (
    Interval,
    const_e,
    const_pi,
    pow34,
    root4,
    sincos_enclosure,
    sqrt_enclosure,
)

__all__ = [
    "BesselEnclosure",
    "ContourEstimate",
    "ErrorBudget",
    "OracleDidNotConverge",
    "PROOF_THRESHOLD",
    "bessel_enclosure",
    "bessel_pq",
    "bessel_quadrature_oracle",
    "e6_bessel_form",
    "error_budget",
    "h_terms",
    "laguerre_contour_oracle",
    "main_term",
    "uniform_tail_constant",
]

# Smallest n covered by the analytic argument.
PROOF_THRESHOLD = 10**4

THETA = Interval(-1, 1)

NODE_CAP = 1 << 20
ORACLE_TOL = 1e-12


class OracleDidNotConverge(RuntimeError):
    pass


def _frac(q, prec: int) -> Interval:
    return Interval.from_fraction(Fraction(q), prec)


def _sqrt_e_over_pi(prec: int) -> Interval:
    wp = prec + 8
    return sqrt_enclosure(const_e(wp).div(const_pi(wp), wp), wp).round(prec)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def main_term(n: int, prec: int = 128) -> Interval:
    """Enclosure of sqrt(e/pi) cos(2 sqrt(n) - pi/4) / n^(1/4)."""
    _check_n(n)
    wp = prec + 16
    phase = sqrt_enclosure(n, wp).ldexp(1) - const_pi(wp).ldexp(-2)
    _, cos_phase = sincos_enclosure(phase, wp)
    return (_sqrt_e_over_pi(wp) * cos_phase).div(root4(n, wp), prec)


# ---------------------------------------------------------------------------
# Bessel functions of order 0, 1, 3 at x = 2r
# ---------------------------------------------------------------------------

# (P, Q) of J_v(2r) as polynomials in 1/r: {power: coefficient}, with the
# Theta remainders listed separately as {power: coefficient of [-1, 1]}.
_PQ_TABLE = {
    1: (
        ({0: Fraction(1), 2: Fraction(15, 2**9)}, {3: Fraction(105, 2**13)}),
        ({1: Fraction(3, 16)}, {3: Fraction(105, 2**13)}),
    ),
    3: (
        ({0: Fraction(1), 2: Fraction(-945, 2**9)}, {3: Fraction(3465, 2**13)}),
        ({1: Fraction(35, 2**4)}, {3: Fraction(3465, 2**13)}),
    ),
    0: (
        ({0: Fraction(1)}, {2: Fraction(9, 2**9)}),
        ({1: Fraction(-1, 16)}, {2: Fraction(9, 2**9)}),
    ),
}


def bessel_pq(v: int, r: Interval, prec: int = 128) -> Tuple[Interval, Interval]:
    """P(2r, v) and Q(2r, v) for v in {0, 1, 3}, Theta terms included."""
    if v not in _PQ_TABLE:
        raise ValueError(f"unsupported Bessel order {v}; only 0, 1 and 3 are available")
    r = Interval.coerce(r)
    if r.lo.man <= 0:
        raise ValueError("r must be positive")
    wp = prec + 8
    inv = Interval(1).div(r, wp)
    powers = {0: Interval(1), 1: inv}
    for k in (2, 3):
        powers[k] = (powers[k - 1] * inv).round(wp)

    def evaluate(main, remainder):
        total = Interval(0)
        for k, c in main.items():
            total = total + powers[k] * Interval.coerce(c)
        for k, c in remainder.items():
            total = total + powers[k] * Interval.coerce(c) * THETA
        return total.round(prec)

    (p_main, p_rem), (q_main, q_rem) = _PQ_TABLE[v]
    return evaluate(p_main, p_rem), evaluate(q_main, q_rem)


@dataclass(frozen=True)
class BesselEnclosure:
    v: int
    x: Interval
    P: Interval
    Q: Interval
    J: Interval


def bessel_enclosure(v: int, r, prec: int = 128) -> BesselEnclosure:
    """Enclosure of J_v(2r) = (1/(pi r))^(1/2) (cos(phi) P - sin(phi) Q),
    phi = 2r - v pi/2 - pi/4.

    Rigorous provided the Theta remainder bounds hold, which they do for all
    r > 0: every derivative used has a negative exponent on |1 +- iu/4r| >= 1.
    """
    r = Interval.coerce(r)
    wp = prec + 16
    P, Q = bessel_pq(v, r, wp)
    pi = const_pi(wp)
    phase = r.ldexp(1) - pi * Interval.from_fraction(Fraction(2 * v + 1, 4), wp)
    sin_phi, cos_phi = sincos_enclosure(phase, wp)
    scale = sqrt_enclosure(Interval(1).div(pi * r, wp), wp)
    J = (scale * (cos_phi * P - sin_phi * Q)).round(prec)
    return BesselEnclosure(v=v, x=r.ldexp(1).round(prec), P=P.round(prec), Q=Q.round(prec), J=J)


def _trapezoid_until_stable(integrand, nodes: int, min_nodes: int = 0) -> Tuple[complex, int]:
    if nodes < 16 or nodes & (nodes - 1):
        raise ValueError("nodes must be a power of two and at least 16")
    previous = None
    while nodes <= NODE_CAP:
        alpha = -math.pi + 2 * math.pi * np.arange(nodes) / nodes
        value = complex(np.mean(integrand(alpha)))
        if previous is not None and nodes >= min_nodes and abs(value - previous) < ORACLE_TOL:
            return value, nodes
        previous = value
        nodes *= 2
    raise OracleDidNotConverge(f"trapezoid rule did not settle below {ORACLE_TOL} with {NODE_CAP} nodes")


def bessel_quadrature_oracle(k: int, x: float, nodes: int = 16) -> float:
    """J_k(x) = (1/2pi) int_{-pi}^{pi} exp(-i x sin a + i k a) da by the
    periodic trapezoid rule (floating point, not rigorous)."""
    value, _ = _trapezoid_until_stable(
        lambda a: np.exp(-1j * x * np.sin(a) + 1j * k * a),
        nodes,
        # below |x| + |k| nodes the rule aliases the oscillation
        min_nodes=abs(x) + abs(k) + 16,
    )
    return value.real


class ContourEstimate(NamedTuple):
    value: float
    imag: float
    nodes: int


def laguerre_contour_oracle(n: int, nodes: int = 64) -> ContourEstimate:
    """L_n(1) = e/(2 pi i) \\oint e^{-z} z^n / (z-1)^{n+1} dz on the circle
    |z - 1/2| = sqrt(n+1), by the trapezoid rule in floating point.

    The integrand is formed as exp(log-magnitude + phase) so that z^n does
    not overflow for large n.
    """
    _check_n(n)
    if nodes < 64:
        raise ValueError("nodes must be at least 64")
    r = math.sqrt(n + 1)

    def integrand(alpha):
        w = r * np.exp(1j * alpha)
        z = 0.5 + w
        log_f = 1.0 - z + n * np.log(z) - (n + 1) * np.log(z - 1)
        # dz = i w da; the 1/(2 pi i) and the mean over nodes absorb the rest
        return np.exp(log_f) * w

    value, used = _trapezoid_until_stable(integrand, nodes, min_nodes=4 * int(r) + 64)
    return ContourEstimate(value.real, value.imag, used)


# ---------------------------------------------------------------------------
# error budget
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ErrorBudget:
    n: int
    r: Interval
    e2: Interval
    e3: Interval
    e4: Interval
    e5: Interval
    e6: Interval
    e7: Interval
    e8: Interval
    total: Interval
    normalized: Interval
    in_proof_range: bool

    @property
    def terms(self) -> dict:
        return {f"e{i}": getattr(self, f"e{i}") for i in range(2, 9)}


def error_budget(n: int, prec: int = 128) -> ErrorBudget:
    """Interval evaluation of the majorants E2..E8 at n.

    ``in_proof_range`` is False below 10^4, where the formulas are still
    evaluated but do not bound anything.
    """
    _check_n(n)
    wp = prec + 16
    N = Interval(n + 1)
    r = sqrt_enclosure(N, wp)
    sqrt_e = sqrt_enclosure(const_e(wp), wp)
    sqrt_pi = sqrt_enclosure(const_pi(wp), wp)
    e32 = const_e(wp) * sqrt_e
    r_minus_half = r - Interval.from_fraction(Fraction(1, 2), wp)
    N34 = pow34(N, wp)
    N54 = N * root4(N, wp)
    n34 = pow34(n, wp)
    n54 = Interval(n) * root4(n, wp)

    e2 = (_frac("0.00605", wp) * e32).div(N * r * r_minus_half, wp)
    e3 = e32.div(N * r_minus_half * 80, wp)
    e4 = sqrt_e.div(r * r_minus_half, wp)
    e5 = (sqrt_e * 4).div(N, wp) + sqrt_e.div(N * 24, wp)
    e6 = _frac("0.546", wp).div(N34, wp)
    e7 = sqrt_e.div(sqrt_pi * N34 * 16, wp) + (sqrt_e * 9).div(sqrt_pi * N54 * 256, wp)
    e8 = _sqrt_e_over_pi(wp) * (Interval(1).div(n34, wp) + Interval(1).div(n54 * 4, wp))
    terms = [t.round(prec) for t in (e2, e3, e4, e5, e6, e7, e8)]
    total = sum(terms[1:], terms[0]).round(prec)
    normalized = (total * n34).round(prec)
    return ErrorBudget(n, r.round(prec), *terms, total=total, normalized=normalized, in_proof_range=n >= PROOF_THRESHOLD)


def uniform_tail_constant(n0: int = PROOF_THRESHOLD, prec: int = 128) -> Interval:
    """Upper enclosure of sup_{n >= n0} (E2 + ... + E8) n^(3/4).

    E2..E5 and E8 times n^(3/4) decrease in n, so their value at n0 bounds
    them.  E6 n^(3/4) = 0.546 (n/(n+1))^(3/4) increases toward 0.546, and
    E7 n^(3/4) is bounded by sqrt(e)/(16 sqrt(pi)) + 9 sqrt(e)/(256 sqrt(pi) sqrt(n0)).
    """
    wp = prec + 16
    b = error_budget(n0, wp)
    n34 = pow34(n0, wp)
    decreasing = (b.e2 + b.e3 + b.e4 + b.e5 + b.e8) * n34
    sqrt_e = sqrt_enclosure(const_e(wp), wp)
    sqrt_pi = sqrt_enclosure(const_pi(wp), wp)
    e7_sup = sqrt_e.div(sqrt_pi * 16, wp) + (sqrt_e * 9).div(sqrt_pi * sqrt_enclosure(n0, wp) * 256, wp)
    return (decreasing + _frac("0.546", wp) + e7_sup).round(prec)


def e6_bessel_form(n: int, prec: int = 128) -> Interval:
    """sqrt(e)/(2r) |J_1(2r) - J_3(2r)/6| with r = sqrt(n+1)."""
    _check_n(n)
    wp = prec + 16
    r = sqrt_enclosure(n + 1, wp)
    j1 = bessel_enclosure(1, r, wp).J
    j3 = bessel_enclosure(3, r, wp).J
    diff = abs(j1 - j3.div(6, wp))
    sqrt_e = sqrt_enclosure(const_e(wp), wp)
    return (sqrt_e * diff).div(r.ldexp(1), prec)


def h_terms(n: int, prec: int = 128) -> Tuple[Interval, Interval, Interval]:
    """(H1, H2, H3): sqrt(e) J_0(2r), sqrt(e/(pi r)) cos(2r - pi/4) and M(n)."""
    _check_n(n)
    wp = prec + 16
    r = sqrt_enclosure(n + 1, wp)
    sqrt_e = sqrt_enclosure(const_e(wp), wp)
    h1 = (sqrt_e * bessel_enclosure(0, r, wp).J).round(prec)
    _, cos_phase = sincos_enclosure(r.ldexp(1) - const_pi(wp).ldexp(-2), wp)
    h2 = (sqrt_enclosure(const_e(wp).div(const_pi(wp) * r, wp), wp) * cos_phase).round(prec)
    h3 = main_term(n, prec)
    return h1, h2, h3
