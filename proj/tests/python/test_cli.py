"""Drives the command-line tool as a subprocess."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("BRAIDMAT_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="BRAIDMAT_CLI not set")


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True
    )


def test_enumerate_count():
    out = run("enumerate", "--n", "5", "--count-only")
    assert out.returncode == 0
    assert out.stdout.strip() == "357"


def test_matrix_of_word():
    out = run("matrix", "-", "--n", "2", stdin="1 1")
    assert out.returncode == 0
    body = json.loads(out.stdout)
    assert body["pure"]
    assert body["cn"]["entries"] == [[0, 2], [2, 0]]


def test_realize_verify_round_trip(tmp_path):
    cert_path = tmp_path / "cert.json"
    out = run(
        "realize", "-", "--kind", "cn", "--mask", "--n", "3",
        "--out", str(cert_path), stdin="1-2,2-3",
    )
    assert out.returncode == 0
    cert = json.loads(cert_path.read_text())
    assert cert["verified"]

    check = run("verify", str(cert_path))
    assert check.returncode == 0
    assert json.loads(check.stdout) == {"verified": True}

    cert["word"] = "1 1"
    cert_path.write_text(json.dumps(cert))
    recheck = run("verify", str(cert_path))
    assert recheck.returncode == 1
    assert json.loads(recheck.stderr)["error"] == "RealizationFailed"


def test_t0_violation_reports_witness():
    out = run("t0", "-", "--mask", "--n", "3", stdin="1-3")
    assert out.returncode == 1
    assert out.stdout == ""
    err = json.loads(out.stderr)
    assert err["error"] == "NotT0"
    assert err["witness"] == [1, 2, 3]


def test_full_sweep_small():
    out = run("theorem6", "--n", "4", "--format", "json")
    assert out.returncode == 0
    body = json.loads(out.stdout)
    assert (body["total"], body["verified"]) == (40, 40)


def test_usage_errors_exit_two():
    out = run("realize")
    assert out.returncode == 2
