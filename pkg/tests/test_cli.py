"""CLI behavior: output formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from qcatalan.cli import main


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_proc(*argv, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "qcatalan", *argv],
        capture_output=True,
        text=True,
        env=full_env,
    )


class TestPoly:
    def test_text(self, capsys):
        code, out, _ = run_main(capsys, "poly", "3")
        assert code == 0
        assert out == "1 + q + 2*q^2 + q^3\n"

    def test_json(self, capsys):
        code, out, _ = run_main(capsys, "poly", "4", "--json")
        assert code == 0
        assert json.loads(out) == ["1", "1", "2", "3", "3", "3", "1"]


class TestEnumerate:
    def test_text(self, capsys):
        code, out, _ = run_main(capsys, "enumerate", "3")
        assert code == 0
        assert out.splitlines() == ["111222", "112122", "112212", "121122", "121212"]

    def test_json(self, capsys):
        code, out, _ = run_main(capsys, "enumerate", "2", "--json")
        assert json.loads(out) == ["1122", "1212"]


class TestInv:
    def test_text(self, capsys):
        code, out, _ = run_main(capsys, "inv", "121212")
        assert code == 0
        assert out == "3\n"

    def test_invalid_word_is_usage_error(self, capsys):
        code, _, err = run_main(capsys, "inv", "2112")
        assert code == 2
        assert "lattice word" in err


class TestInject:
    def test_json_fields(self, capsys):
        code, out, _ = run_main(capsys, "inject", "1212", "1122", "--r", "1", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["nu"] == "12"
        assert doc["omega"] == "121122"
        assert doc["shift"] == 1
        assert doc["certificate"]["t"] == 0

    def test_text(self, capsys):
        code, out, _ = run_main(capsys, "inject", "12", "12")
        assert code == 0
        assert "nu    = " in out and "omega = 1212" in out

    def test_bad_parameters(self, capsys):
        code, _, err = run_main(capsys, "inject", "112122", "12", "--r", "1")
        assert code == 2
        assert "l > k - r" in err


class TestVerify:
    def test_theorem_small(self, capsys):
        code, out, _ = run_main(capsys, "verify", "theorem", "--kmax", "4")
        assert code == 0
        assert out.splitlines()[-1] == "cells=10 all_ok=True"

    def test_corollary_small_json(self, capsys):
        code, out, _ = run_main(
            capsys, "verify", "corollary", "--kmax", "3", "--rmax", "3", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["ok"] is True
        assert all(rep["kind"] == "gap" for rep in doc["reports"])
        assert all("sharpness" in rep["details"] for rep in doc["reports"])

    def test_audit_small(self, capsys):
        code, out, _ = run_main(
            capsys, "verify", "audit", "--kmax", "3", "--rmax", "2", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert all(rep["details"]["injective"] for rep in doc["reports"])

    def test_audit_cap_guard(self, capsys):
        code, _, err = run_main(capsys, "verify", "audit", "--kmax", "9")
        assert code == 2
        assert "--cap" in err

    def test_counterexamples(self, capsys):
        code, out, _ = run_main(capsys, "verify", "counterexamples", "--json")
        assert code == 0
        doc = json.loads(out)
        assert [rep["verdict"] for rep in doc["reports"]] == [True, True]

    def test_jobs_match_serial(self, capsys):
        _, serial, _ = run_main(capsys, "verify", "theorem", "--kmax", "6", "--json")
        _, parallel, _ = run_main(
            capsys, "verify", "theorem", "--kmax", "6", "--jobs", "2", "--json"
        )
        assert serial == parallel


class TestRender:
    def test_ascii_default(self, capsys):
        code, out, _ = run_main(capsys, "render", "12", "12")
        assert code == 0
        assert "*" in out

    def test_svg_to_file(self, capsys, tmp_path):
        target = tmp_path / "scene.svg"
        code, out, _ = run_main(
            capsys, "render", "1212", "1122", "--svg", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("<?xml")

    def test_stage_after(self, capsys):
        code, out, _ = run_main(
            capsys, "render", "1212", "1122", "--svg", "--stage", "after"
        )
        assert code == 0
        assert out.count("<rect") == 3  # big square, inner square, shaded area


class TestUsageErrors:
    def test_no_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["poly", "3", "--wat"])
        assert exc.value.code == 2

    def test_bad_jobs(self, capsys):
        code, _, err = run_main(capsys, "verify", "theorem", "--kmax", "2", "--jobs", "0")
        assert code == 2


class TestEndToEnd:
    def test_console_entry(self):
        proc = run_proc("poly", "3")
        assert proc.returncode == 0
        assert proc.stdout == "1 + q + 2*q^2 + q^3\n"

    def test_repeated_invocations_identical(self):
        for argv in (["inject", "1212", "1122", "--json"], ["render", "12", "12", "--svg"]):
            first = run_proc(*argv)
            second = run_proc(*argv)
            assert first.stdout == second.stdout
            assert first.returncode == second.returncode == 0

    def test_enum_env_cap(self):
        proc = run_proc("enumerate", "4", env={"QCAT_MAX_ENUM": "3"})
        assert proc.returncode == 2
        assert "safety cap" in proc.stderr
