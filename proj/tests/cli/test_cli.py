import json
from fractions import Fraction
import os
import subprocess

import pytest

CLI = os.environ.get("TORCOV_CLI", "torcov")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def run_json(*args):
    r = run("--json", *args)
    return r.returncode, (json.loads(r.stdout) if r.stdout.strip() else None)


def test_count_connected():
    rc, doc = run_json("count", "--profile", "(2),(2)", "--order", "8", "--variant", "connected")
    assert rc == 0
    assert doc["schema"] == 1
    assert doc["command"] == "count"
    assert doc["series"]["coeffs"] == ["0", "0", "2", "16", "60", "160", "360", "672", "1240"]


def test_partition_numbers():
    rc, doc = run_json("count", "--profile", "", "--order", "5", "--variant", "all")
    assert rc == 0
    assert doc["series"]["coeffs"] == ["1", "1", "2", "3", "5", "7"]


def test_zero_series_is_padded():
    rc, doc = run_json("count", "--profile", "(2),(2)", "--order", "1", "--variant", "connected")
    assert rc == 0
    assert doc["series"] == {"order": 1, "coeffs": ["0", "0"]}


def test_fit_output_order():
    rc, doc = run_json("count", "--profile", "(2),(2)", "--order", "17", "--variant", "connected", "--fit", "6")
    assert rc == 0
    assert doc["qmpoly"] == [
        {"exp": [0, 0, 1], "coeff": "7/180"},
        {"exp": [1, 1, 0], "coeff": "2/3"},
        {"exp": [3, 0, 0], "coeff": "-8/3"},
    ]


def test_zconst_text():
    r = run("zconst", "--power", "2", "--fit")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "-2*G2 + 1/6"


def test_cterm_and_sv():
    rc, doc = run_json("cterm", "--graph", "1-2,1-2,1-2", "--m", "0,0,0", "--order", "17", "--fit", "6")
    assert rc == 0
    assert all(c["pass"] for c in doc["checks"])
    rc, doc = run_json("sv", "--profile", "(2),(2)", "--p", "-1", "--order", "17", "--variant", "connected",
                       "--fit", "6", "--per-graph")
    assert rc == 0
    assert {"exp": [0, 0, 1], "coeff": "7/144"} in doc["qmpoly"]


def test_graphs_and_triple():
    rc, doc = run_json("graphs", "--profile", "(3)", "--order", "10", "--per-graph")
    assert rc == 0
    assert [g["graph"] for g in doc["graphs"]] == ["1-1", "1-1,1-1"]
    rc, doc = run_json("triple", "--win", "2,3", "--wout", "5", "--mu", "(2)")
    assert rc == 0
    assert doc["A_prime"] == "1"
    rc, doc = run_json("ssz-check", "--m", "1", "--n", "2", "--ell", "4", "--radius", "6")
    assert rc == 0


def test_exit_codes():
    assert run("count", "--profile", "(2", "--order", "3").returncode == 2
    assert run("bogus").returncode == 2
    assert run("count", "--profile", "(2),(2)", "--order", "8", "--fit", "6").returncode == 3
    assert run("count", "--profile", "(2),(2)", "--order", "6", "--oracle", "6", "--budget", "100").returncode == 5


def test_deterministic_and_round_trip():
    args = ("count", "--profile", "(2),(2),(2),(2)", "--order", "12", "--variant", "connected")
    a = run("--json", *args).stdout
    b = run("--json", "--threads", "1", *args).stdout
    assert a == b
    rc, doc = run_json("count", "--profile", "(3)", "--order", "20", "--variant", "connected", "--fit", "4")
    assert rc == 0
    torcov = pytest.importorskip("torcov")
    refit = torcov.fit(doc["series"]["coeffs"], 4)
    assert refit == {tuple(t["exp"]): Fraction(t["coeff"]) for t in doc["qmpoly"]}


def test_selftest():
    rc, doc = run_json("selftest")
    assert rc == 0
    assert len(doc["checks"]) == 8
    assert all(c["pass"] for c in doc["checks"])
