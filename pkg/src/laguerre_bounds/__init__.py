"""Certified bounds for Q_n(1), L_n(1) and the explicit asymptotics of L_n(1)."""

from .exact import (
    QStream,
    laguerre_at_one,
    laguerre_at_one_stream,
    laguerre_direct,
    q_at_one_stream,
    q_direct,
    q_poly_stream,
)
from .interval import Dyadic, Interval, Ordering, compare_strict
from .verifier import VerificationReport, Verdict, Witness

__version__ = "0.1.0"

__all__ = [
    "Dyadic",
    "Interval",
    "Ordering",
    "QStream",
    "VerificationReport",
    "Verdict",
    "Witness",
    "compare_strict",
    "laguerre_at_one",
    "laguerre_at_one_stream",
    "laguerre_direct",
    "q_at_one_stream",
    "q_direct",
    "q_poly_stream",
]
