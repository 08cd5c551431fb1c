"""Command-line front end.

Exit codes: 0 verified / success, 1 violated, 2 inconclusive, 3 usage or
input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from . import asymptotics, exact, verifier
from .interval import Dyadic, Interval
from .verifier import OutsideProofRange, VerificationReport, Verdict

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

DECIMAL_DIGITS = 25
DEFAULT_SWEEP = 2000

ENV_PRECISION_CAP = "LAGUERRE_BOUNDS_PRECISION_CAP"
ENV_THREADS = "LAGUERRE_BOUNDS_THREADS"

_VERDICT_EXIT = {
    Verdict.VERIFIED: EXIT_OK,
    Verdict.VIOLATED: EXIT_VIOLATED,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    pass


@dataclass
class Table:
    columns: List[str]
    rows: Iterable[Sequence[str]]
    verdict: Verdict = Verdict.VERIFIED


@dataclass
class RunConfig:
    subcommand: str
    precision_start: int = verifier.DEFAULT_PREC
    precision_cap: int = verifier.DEFAULT_PREC_CAP
    output_format: str = "text"
    output_path: Optional[str] = None
    threads: int = 1

    def __post_init__(self):
        if self.precision_start > self.precision_cap:
            raise UsageError("--precision-start must not exceed --precision-cap")
        if self.precision_start < 32:
            raise UsageError("--precision-start must be at least 32 bits")
        if self.threads < 1:
            raise UsageError("--threads must be positive")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def format_exact(value) -> str:
    """Decimal string for integers, ``num/den`` for other rationals."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    raise TypeError(f"not an exact value: {value!r}")


def format_bound(value, up: bool) -> str:
    """Exact values verbatim; dyadic endpoints outward-rounded to 25 digits."""
    if isinstance(value, Dyadic):
        return value.to_decimal_string(DECIMAL_DIGITS, up)
    return format_exact(value)


def interval_strings(iv: Interval) -> List[str]:
    return [format_bound(iv.lo, False), format_bound(iv.hi, True)]


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "check": report.check,
        "range": list(report.range),
        "verdict": report.verdict.value,
        "witnesses": [
            {
                "n": w.n,
                "value_lo": format_bound(w.lo, False),
                "value_hi": format_bound(w.hi, True),
                "label": w.label,
            }
            for w in report.witnesses
        ],
        "precision_bits": report.precision_bits,
        "elapsed_s": round(report.elapsed_s, 6),
        "details": report.details,
    }


def _report_text(report: VerificationReport) -> str:
    lines = [
        f"{report.check}: {report.verdict.value}",
        f"  range: {report.range[0]}..{report.range[1]}",
        f"  precision: {report.precision_bits} bits",
        f"  elapsed: {report.elapsed_s:.3f} s",
    ]
    for w in report.witnesses:
        label = f" ({w.label})" if w.label else ""
        lines.append(f"  n={w.n}{label}: [{format_bound(w.lo, False)}, {format_bound(w.hi, True)}]")
    for key, value in report.details.items():
        lines.append(f"  {key}: {value}")
    return "\n".join(lines) + "\n"


def _write_table(table: Table, fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow(row)
    elif fmt == "json":
        out.write('{"columns": ' + json.dumps(table.columns) + ', "rows": [')
        for i, row in enumerate(table.rows):
            out.write((", " if i else "") + json.dumps(list(row)))
        out.write(f'], "verdict": {json.dumps(table.verdict.value)}}}\n')
    else:
        out.write("  ".join(table.columns) + "\n")
        for row in table.rows:
            out.write("  ".join(row) + "\n")


class _CountingWriter(io.TextIOBase):
    def __init__(self, target):
        self.target = target
        self.count = 0

    def write(self, s: str) -> int:
        self.count += len(s.encode())
        return self.target.write(s)


def emit(obj, fmt: str = "text", path: Optional[str] = None) -> int:
    """Serialize a report or table to ``path`` (stdout when None); returns bytes written."""
    if fmt not in ("text", "json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    target = open(path, "w", encoding="utf-8", newline="") if path else sys.stdout
    try:
        out = _CountingWriter(target)
        if isinstance(obj, VerificationReport):
            if fmt == "json":
                out.write(json.dumps(report_to_dict(obj), indent=2) + "\n")
            elif fmt == "csv":
                _write_table(_report_table(obj), "csv", out)
            else:
                out.write(_report_text(obj))
        else:
            _write_table(obj, fmt, out)
        out.flush()
        return out.count
    finally:
        if path:
            target.close()


def _report_table(report: VerificationReport) -> Table:
    rows = [
        [report.check, report.verdict.value, str(w.n), format_bound(w.lo, False), format_bound(w.hi, True), w.label]
        for w in report.witnesses
    ]
    return Table(["check", "verdict", "n", "value_lo", "value_hi", "label"], rows, report.verdict)


# ---------------------------------------------------------------------------
# value tables
# ---------------------------------------------------------------------------


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def qvalues_table(n_max: int, t: Fraction) -> Table:
    if t == 1:
        rows = ((str(n), format_exact(q)) for n, q in exact.q_at_one_stream(n_max))
    else:
        rows = ((str(n), format_exact(v)) for n, v in exact.q_poly_stream(n_max, t))
    return Table(["n", "value"], rows)


def laguerre_table(n_max: int, t: Fraction) -> Table:
    if t == 1:
        rows = (
            (str(n), format_exact(Fraction(-q if n % 2 else q, f))) for n, q, f in exact.laguerre_at_one_stream(n_max)
        )
    else:
        rows = ((str(n), format_exact(exact.laguerre_direct(n, t))) for n in range(n_max + 1))
    return Table(["n", "value"], rows)


def error_budget_table(ns: Sequence[int], prec: int) -> Table:
    columns = ["n"] + [f"e{i}_hi" for i in range(2, 9)] + ["total_hi", "normalized_hi", "in_proof_range"]
    rows = []
    for n in ns:
        b = asymptotics.error_budget(n, prec)
        if not b.in_proof_range:
            log.warning("n = %d is below %d; the majorants are evaluated but bound nothing", n, asymptotics.PROOF_THRESHOLD)
        his = [format_bound(t.hi, True) for t in b.terms.values()]
        rows.append([str(n)] + his + [format_bound(b.total.hi, True), format_bound(b.normalized.hi, True), str(b.in_proof_range).lower()])
    return Table(columns, rows)


def bessel_table(v: int, r: Fraction, prec: int) -> Table:
    r_iv = Interval.from_fraction(r, prec)
    enc = asymptotics.bessel_enclosure(v, r_iv, prec)
    oracle = asymptotics.bessel_quadrature_oracle(v, 2 * float(r))
    inside = enc.J.contains(oracle)
    row = [str(v), format_exact(r)] + interval_strings(enc.J) + interval_strings(enc.P) + interval_strings(enc.Q)
    row += [repr(oracle), str(inside).lower()]
    columns = ["v", "r", "J_lo", "J_hi", "P_lo", "P_hi", "Q_lo", "Q_hi", "oracle", "oracle_inside"]
    return Table(columns, [row], Verdict.VERIFIED if inside else Verdict.VIOLATED)


def contour_table(ns: Sequence[int], nodes: int, tolerance: float = 1e-8) -> Table:
    rows = []
    verdict = Verdict.VERIFIED
    for n in ns:
        est = asymptotics.laguerre_contour_oracle(n, nodes)
        exact_value = exact.laguerre_at_one(n)
        err = abs(est.value - float(exact_value))
        if err >= tolerance:
            verdict = Verdict.VIOLATED
        rows.append([str(n), repr(est.value), repr(est.imag), repr(float(exact_value)), repr(err), str(est.nodes)])
    return Table(["n", "value", "imag", "exact", "abs_error", "nodes"], rows, verdict)


# ---------------------------------------------------------------------------
# benchmark
# ---------------------------------------------------------------------------


def bench(n_max: int, repetitions: int = 1) -> Table:
    """Time the recurrence sweep against direct summation for n = 0..n_max."""
    if n_max < 10:
        raise UsageError("bench needs n_max >= 10")
    sample = set(range(0, n_max + 1, 100)) | {n_max}
    rec_times, direct_times = [], []
    recurrence_values = {}
    steps = 0
    for _ in range(repetitions):
        start = time.perf_counter()
        stream = exact.q_at_one_stream(n_max)
        for n, q in stream:
            if n in sample:
                recurrence_values[n] = q
        rec_times.append(time.perf_counter() - start)
        steps = max(0, stream.n - 1)
    direct_values = {}
    for _ in range(repetitions):
        start = time.perf_counter()
        for n in range(n_max + 1):
            q = exact.q_direct(n, 1)
            if n in sample:
                direct_values[n] = q
        direct_times.append(time.perf_counter() - start)
    agree = recurrence_values == direct_values
    t_rec, t_direct = min(rec_times), min(direct_times)
    row = [
        str(n_max),
        str(repetitions),
        f"{t_rec:.6f}",
        f"{t_direct:.6f}",
        f"{t_direct / t_rec:.2f}" if t_rec > 0 else "inf",
        str(2 * steps),
        str(len(sample)),
        str(agree).lower(),
    ]
    columns = ["n_max", "repetitions", "recurrence_s", "direct_s", "speedup", "recurrence_mults", "sampled", "sample_agree"]
    return Table(columns, [row], Verdict.VERIFIED if agree else Verdict.VIOLATED)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", dest="output_path", default=None, help="write to this file instead of stdout")
    common.add_argument("--precision-start", type=int, default=verifier.DEFAULT_PREC, help="initial working precision in bits")
    common.add_argument("--precision-cap", type=int, default=None, help=f"precision cap in bits (env {ENV_PRECISION_CAP})")
    common.add_argument("--threads", type=int, default=None, help=f"worker processes for sweeps (env {ENV_THREADS})")
    common.add_argument("-q", "--quiet", action="store_true", help="no progress messages")

    parser = _Parser(prog="laguerre-bounds", description="Certified checks for Q_n(1), L_n(1) and their explicit asymptotics.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("folklore", parents=[common], help="|Q_n(1)| <= n! exactly")
    p.add_argument("--n-max", type=_nonneg, default=DEFAULT_SWEEP)

    p = sub.add_parser("ratio-extrema", parents=[common], help="extrema of Q_n(1) n^(1/4)/n!")
    p.add_argument("--n-max", type=_positive, default=DEFAULT_SWEEP)

    p = sub.add_parser("theorem1-numeric", parents=[common], help="|L_n(1) - M(n)| < c/n^(3/4) on a finite range")
    p.add_argument("--n-max", type=_positive, default=DEFAULT_SWEEP)
    p.add_argument("--c", default="0.33", help="rational threshold, e.g. 0.33 or 2.38")

    p = sub.add_parser("theorem1-tail", parents=[common], help="analytic constant chain at n >= 10^4")
    p.add_argument("--n", type=_positive, default=asymptotics.PROOF_THRESHOLD)

    p = sub.add_parser("lemma4", parents=[common], help="series coefficients b_k and their bound")
    p.add_argument("--k-max", type=int, default=500)

    p = sub.add_parser("polynomiksi", parents=[common], help="scalar inequality behind the polynomial approximation")
    p.add_argument("--n", type=_positive, action="append", help="grid point (repeatable)")

    p = sub.add_parser("qraja", parents=[common], help="|Q_n(1)| <= n! e^(2 sqrt n)")
    p.add_argument("--n-max", type=_nonneg, default=DEFAULT_SWEEP)

    p = sub.add_parser("qvalues", parents=[common], help="table of exact Q_n(t)")
    p.add_argument("--n-max", type=_nonneg, default=20)
    p.add_argument("--t", default="1")

    p = sub.add_parser("laguerre", parents=[common], help="table of exact L_n(t)")
    p.add_argument("--n-max", type=_nonneg, default=20)
    p.add_argument("--t", default="1")

    p = sub.add_parser("bessel", parents=[common], help="enclosure of J_v(2r) with the quadrature oracle")
    p.add_argument("--v", type=int, choices=[0, 1, 3], default=0)
    p.add_argument("--r", default="100")

    p = sub.add_parser("error-budget", parents=[common], help="majorants E2..E8")
    p.add_argument("--n", type=_positive, action="append", help="index (repeatable, default 10000)")

    p = sub.add_parser("oracle-contour", parents=[common], help="contour-integral quadrature for L_n(1)")
    p.add_argument("--n", type=_positive, action="append", help="index (repeatable, default 10)")
    p.add_argument("--nodes", type=int, default=64)

    p = sub.add_parser("bench", parents=[common], help="recurrence vs direct summation timing")
    p.add_argument("--n-max", type=_nonneg, default=DEFAULT_SWEEP)
    p.add_argument("--repetitions", type=_positive, default=1)
    return parser


def _dispatch(args, cfg: RunConfig):
    prec, cap, workers = cfg.precision_start, cfg.precision_cap, cfg.threads
    cmd = cfg.subcommand
    if cmd == "folklore":
        return verifier.check_folklore(args.n_max)
    if cmd == "ratio-extrema":
        return verifier.check_ratio_extrema(args.n_max, prec, cap, workers)
    if cmd == "theorem1-numeric":
        c = _parse_rational(args.c)
        if c <= 0:
            raise UsageError("--c must be positive")
        return verifier.check_theorem1_numeric(args.n_max, c, prec, cap, workers)
    if cmd == "theorem1-tail":
        return verifier.check_theorem1_tail(args.n, prec, cap)
    if cmd == "lemma4":
        return verifier.check_lemma4(args.k_max, prec, cap)
    if cmd == "polynomiksi":
        return verifier.check_polynomiksi_constant(prec, cap, args.n or verifier.POLYNOMIKSI_GRID)
    if cmd == "qraja":
        return verifier.check_qraja(args.n_max, prec, cap)
    if cmd == "qvalues":
        return qvalues_table(args.n_max, _parse_rational(args.t))
    if cmd == "laguerre":
        return laguerre_table(args.n_max, _parse_rational(args.t))
    if cmd == "bessel":
        r = _parse_rational(args.r)
        if r <= 0:
            raise UsageError("--r must be positive")
        return bessel_table(args.v, r, prec)
    if cmd == "error-budget":
        return error_budget_table(args.n or [asymptotics.PROOF_THRESHOLD], prec)
    if cmd == "oracle-contour":
        return contour_table(args.n or [10], args.nodes)
    if cmd == "bench":
        return bench(args.n_max, args.repetitions)
    raise UsageError(f"unknown subcommand {cmd!r}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if not args.quiet:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(name)s: %(message)s")
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            precision_start=args.precision_start,
            precision_cap=args.precision_cap if args.precision_cap is not None else _env_int(ENV_PRECISION_CAP, verifier.DEFAULT_PREC_CAP),
            output_format=args.output_format,
            output_path=args.output_path,
            threads=args.threads if args.threads is not None else _env_int(ENV_THREADS, 1),
        )
        result = _dispatch(args, cfg)
        emit(result, cfg.output_format, cfg.output_path)
    except (UsageError, OutsideProofRange, ValueError, TypeError) as exc:
        print(f"laguerre-bounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"laguerre-bounds: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except asymptotics.OracleDidNotConverge as exc:
        print(f"laguerre-bounds: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return _VERDICT_EXIT[result.verdict]


def main() -> None:
    sys.exit(run())
