import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from laguerre_bounds import cli
from laguerre_bounds.exact import q_direct
from laguerre_bounds.verifier import check_folklore

REPORT_KEYS = {"check", "range", "verdict", "witnesses", "precision_bits", "elapsed_s", "details"}


def run(capsys, *argv):
    code = cli.run([*argv, "-q"])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qvalues_csv(capsys):
    code, out, _ = run(capsys, "qvalues", "--n-max", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "value"], ["0", "1"], ["1", "0"], ["2", "-1"], ["3", "4"], ["4", "-15"]]


def test_qvalues_rational_t(capsys):
    code, out, _ = run(capsys, "qvalues", "--n-max", "2", "--t", "1/2", "--format", "csv")
    assert code == 0
    # Q_2(1/2) = 1 - 4/2 + 2/4
    assert out.splitlines()[-1] == "2,-1/2"


def test_laguerre_json(capsys):
    code, out, _ = run(capsys, "laguerre", "--n-max", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["columns"] == ["n", "value"]
    assert data["rows"] == [["0", "1"], ["1", "0"], ["2", "-1/2"], ["3", "-2/3"]]


def test_big_values_are_decimal_strings(capsys):
    code, out, _ = run(capsys, "qvalues", "--n-max", "300", "--format", "json")
    last = json.loads(out)["rows"][-1][1]
    assert isinstance(last, str) and int(last) == q_direct(300, 1)


@pytest.mark.parametrize(
    "argv",
    [
        ["folklore", "--n-max", "200"],
        ["ratio-extrema", "--n-max", "100"],
        ["theorem1-numeric", "--n-max", "100"],
        ["theorem1-tail"],
        ["lemma4", "--k-max", "60"],
        ["polynomiksi"],
        ["qraja", "--n-max", "100"],
    ],
)
def test_report_json_schema(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert REPORT_KEYS <= set(data)
    assert data["verdict"] == "Verified"
    assert len(data["range"]) == 2
    for w in data["witnesses"]:
        assert {"n", "value_lo", "value_hi", "label"} <= set(w)
        assert isinstance(w["value_lo"], str) and isinstance(w["value_hi"], str)


def test_folklore_json_has_no_witnesses(capsys):
    _, out, _ = run(capsys, "folklore", "--n-max", "100", "--format", "json")
    assert json.loads(out)["witnesses"] == []


def test_ratio_extrema_json_witnesses(capsys):
    _, out, _ = run(capsys, "ratio-extrema", "--n-max", "300", "--format", "json")
    witnesses = json.loads(out)["witnesses"]
    argmax = next(w for w in witnesses if w["label"] == "argmax")
    assert float(argmax["value_lo"]) <= float(argmax["value_hi"]) < 0.9302


@pytest.mark.parametrize(
    "argv",
    [
        ["bessel", "--v", "1", "--r", "10"],
        ["error-budget", "--n", "10000", "--n", "20000"],
        ["oracle-contour", "--n", "5", "--n", "12"],
    ],
)
def test_value_tables_json(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "Verified"
    assert all(len(r) == len(data["columns"]) for r in data["rows"])


def test_error_budget_csv_columns(capsys):
    code, out, _ = run(capsys, "error-budget", "--n", "10000", "--format", "csv")
    assert code == 0
    header, row = list(csv.reader(io.StringIO(out)))
    assert header[:10] == ["n", "e2_hi", "e3_hi", "e4_hi", "e5_hi", "e6_hi", "e7_hi", "e8_hi", "total_hi", "normalized_hi"]
    assert float(row[header.index("normalized_hi")]) < 2.38


def test_theorem1_tail_below_threshold_exits_3(capsys):
    code, _, err = run(capsys, "theorem1-tail", "--n", "1000")
    assert code == 3
    assert "threshold" in err


def test_violation_exit_code(capsys):
    code, out, _ = run(capsys, "theorem1-numeric", "--n-max", "30", "--c", "0.1")
    assert code == 1
    assert "Violated" in out


# 1e-20 above the scaled deviation at n = 7, the worst case for n <= 10
TIGHT_C = "0.32989467621235622151"


def test_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "theorem1-numeric", "--n-max", "10", "--c", TIGHT_C, "--precision-start", "32", "--precision-cap", "32")
    assert code == 2
    assert "Inconclusive" in out


def test_precision_escalation_resolves(capsys):
    code, out, _ = run(capsys, "theorem1-numeric", "--n-max", "10", "--c", TIGHT_C, "--precision-start", "32", "--format", "json")
    assert code == 0
    assert json.loads(out)["precision_bits"] > 64


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["folklore", "--bogus"],
        ["folklore", "--n-max", "-5"],
        ["qvalues", "--t", "abc"],
        ["bessel", "--v", "2"],
        ["bessel", "--r", "-1"],
        ["folklore", "--precision-start", "512", "--precision-cap", "256"],
        ["folklore", "--threads", "0"],
        ["bench", "--n-max", "5"],
        ["folklore", "--format", "xml"],
    ],
)
def test_usage_errors_exit_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert err


def test_no_arguments_exit_3(capsys):
    assert cli.run([]) == 3


def test_unwritable_output(capsys, tmp_path):
    code, _, _ = run(capsys, "qvalues", "--output", str(tmp_path / "missing" / "x.csv"))
    assert code == 3


def test_output_file_and_byte_count(tmp_path):
    path = tmp_path / "q.csv"
    table = cli.qvalues_table(50, Fraction(1))
    written = cli.emit(table, "csv", str(path))
    assert written == len(path.read_bytes())


def test_exact_output_is_byte_identical(tmp_path, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.run(["qvalues", "--n-max", "400", "--format", "csv", "--output", str(a), "-q"]) == 0
    monkeypatch.setenv(cli.ENV_THREADS, "2")
    assert cli.run(["qvalues", "--n-max", "400", "--format", "csv", "--output", str(b), "-q"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_report_json_identical_across_threads(tmp_path):
    outputs = []
    for threads in ("1", "2"):
        path = tmp_path / f"r{threads}.json"
        cli.run(["ratio-extrema", "--n-max", "120", "--threads", threads, "--format", "json", "--output", str(path), "-q"])
        data = json.loads(path.read_text())
        data.pop("elapsed_s")
        outputs.append(data)
    assert outputs[0] == outputs[1]


def test_env_precision_cap(monkeypatch, capsys):
    monkeypatch.setenv(cli.ENV_PRECISION_CAP, "32")
    code, _, _ = run(capsys, "theorem1-numeric", "--n-max", "10", "--c", TIGHT_C, "--precision-start", "32")
    assert code == 2
    monkeypatch.setenv(cli.ENV_PRECISION_CAP, "lots")
    code, _, _ = run(capsys, "lemma4")
    assert code == 3


def test_progress_goes_to_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "laguerre_bounds", "folklore", "--n-max", "1200", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "folklore: n = 500" in proc.stderr and "folklore: n = 1000" in proc.stderr
    assert json.loads(proc.stdout)["verdict"] == "Verified"


def test_text_report(capsys):
    cli.emit(check_folklore(10), "text")
    assert capsys.readouterr().out.startswith("folklore: Verified")


def test_bench_table():
    table = cli.bench(300, repetitions=2)
    (row,) = table.rows
    record = dict(zip(table.columns, row))
    assert record["sample_agree"] == "true"
    assert int(record["recurrence_mults"]) == 2 * (300 - 1)
    assert table.verdict.value == "Verified"


def test_bench_speedup_at_2000():
    table = cli.bench(2000)
    record = dict(zip(table.columns, table.rows[0]))
    assert float(record["speedup"]) > 1
    assert record["sample_agree"] == "true"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "laguerre_bounds", "qvalues", "--n-max", "3", "--format", "csv", "-q"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["n,value", "0,1", "1,0", "2,-1", "3,4"]
