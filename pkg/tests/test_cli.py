import csv
import io
import json
import subprocess
import sys

import pytest

from gdiv import cli


def call(*argv):
    out = io.StringIO()
    try:
        code = cli.run(list(argv), out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--format", "json")
    return code, json.loads(text)


@pytest.mark.parametrize(
    "family, arg, expected",
    [("tau_e_k_star", "12", "3"), ("frak_t_e_k", "2", "2"), ("frak_t_e_k", "-4", "3"), ("frak_t_e_k", "1+2i", "1")],
)
def test_eval(family, arg, expected):
    code, text = call("eval", "--family", family, "--k", "2", f"--arg={arg}")
    assert code == 0
    assert text.strip() == expected


def test_constants_text():
    code, text = call("constants", "--which", "C", "--k", "2", "--cutoff", "1e6")
    assert code == 0
    header, row = text.strip().split("\n")
    assert header.split("\t") == cli.COLUMNS["constants"]
    assert abs(float(row.split("\t")[2]) - 1.156101) <= 5e-6


def test_json_envelope_schema():
    code, env = call_json("sum", "--family", "frak_t_e_k", "--k", "2", "--x", "10")
    assert code == 0
    assert set(env) == {"command", "parameters", "rows", "metadata"}
    assert env["command"] == "sum"
    assert env["parameters"]["x"] == 10
    assert env["rows"][0]["exact"] == 11
    assert env["metadata"]["version"] and "timing_ms" in env["metadata"]
    assert env["metadata"]["cutoffs"]["x_max"] == 10


def test_json_is_deterministic_apart_from_timing():
    argv = ("champions", "--family", "frak_t_e_k", "--k", "2", "--max", "1e4")
    _, a = call_json(*argv)
    _, b = call_json(*argv)
    a["metadata"].pop("timing_ms")
    b["metadata"].pop("timing_ms")
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--family", "tau_e_k", "--arg", "6"),
        ("factor", "--arg", "5"),
        ("primes", "--max-norm", "20"),
        ("bell", "--family", "frak_t_e_k", "--k", "2"),
        ("sum", "--family", "frak_t_e_k_star", "--xs", "10,100"),
        ("constants", "--which", "A", "--k", "2", "--method", "accelerated", "--cutoff", "1e4"),
        ("champions", "--family", "tau_e_k", "--max", "1000"),
        ("extremal", "--family", "frak_t_e_k", "--l", "2", "--X", "1000"),
    ],
)
def test_csv_header_is_fixed(argv):
    code, text = call(*argv, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == cli.COLUMNS[argv[0]]
    assert len(rows) >= 2


def test_factor_text():
    code, text = call("factor", "--arg", "5")
    assert code == 0
    assert text.strip() == "(0-1i) * (2+1i) * (1+2i)"


def test_factor_rows_multiply_back():
    code, env = call_json("factor", "--arg", "12+5i")
    assert code == 0
    assert [(r["prime"], r["exponent"]) for r in env["rows"]] == [("2+3i", 2)]
    norms = 1
    for r in env["rows"]:
        norms *= r["norm"] ** r["exponent"]
    assert norms == 169


def test_primes_json():
    code, env = call_json("primes", "--max-norm", "10")
    assert code == 0
    assert [(r["re"], r["im"]) for r in env["rows"]] == [(1, 1), (2, 1), (1, 2), (3, 0)]
    assert [r["class"] for r in env["rows"]] == ["ramified", "split", "split", "inert"]


def test_bell_passes():
    code, env = call_json("bell", "--family", "frak_t_e_k_star", "--k", "3")
    assert code == 0
    assert env["metadata"]["report"]["passed"] is True


def test_sum_oracle():
    code, env = call_json("sum", "--family", "frak_t_e_k", "--k", "3", "--x", "1000", "--oracle")
    assert code == 0
    assert env["metadata"]["oracle"]["1000"] == env["rows"][0]["exact"]


def test_count_syntax():
    assert cli._count("1e6") == 10**6
    assert cli._count("10**6") == 10**6
    assert cli._count("250") == 250


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--family", "nope", "--arg", "3"),
        ("eval", "--family", "tau_e_k", "--k", "1", "--arg", "3"),
        ("eval", "--family", "tau_e_k", "--arg", "2+i"),
        ("eval", "--family", "frak_t_e_k", "--arg", "0"),
        ("eval", "--family", "tau_e_k", "--arg", "abc"),
        ("sum", "--family", "frak_t_e_k"),
        ("sum", "--family", "frak_t_e_k", "--x", "2e6", "--oracle"),
        ("constants", "--which", "C", "--cutoff", "1000"),
        ("extremal", "--family", "frak_t_e_k", "--l", "2", "--X", "10"),
    ],
)
def test_input_errors_exit_one(argv, capsys):
    code, _ = call(*argv)
    assert code == 1
    assert "gdiv" in capsys.readouterr().err


def test_verification_failure_exits_two(monkeypatch):
    monkeypatch.setattr(cli, "lattice_summatory_oracle", lambda fam, x: -1)
    code, _ = call("sum", "--family", "frak_t_e_k", "--x", "100", "--oracle")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gdiv", "eval", "--family", "tau_e_k", "--k", "3", "--arg", "4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
