"""Golden CLI invocations: JSON payloads and the exit-code contract."""

import json
import subprocess
import sys

import pytest

from abtuple.cli import main

EXAMPLE_FULL_RANK = "1 0 0\n1 1 0\n1 2 2\n1 2 5\n"


@pytest.fixture()
def tuple_file(tmp_path):
    def write(text, name="t.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    payload = json.loads(out.out)
    return code, payload, out.err


class TestRank:
    def test_rank(self, capsys, tuple_file):
        code, payload, err = run_cli(capsys, "rank", tuple_file(EXAMPLE_FULL_RANK))
        assert code == 0
        assert payload == {"dim": 3, "q": 4, "rank": 3}
        assert "rank 3" in err

    def test_stdin_dash(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO("2 0\n0 3\n"))
        code, payload, _ = run_cli(capsys, "rank", "-")
        assert code == 0
        assert payload["rank"] == 2


class TestProperty:
    def test_holds_exit_zero(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "property", "--r", "4", "--s", "2", tuple_file("0\n0\n2\n-2\n")
        )
        assert code == 0
        assert payload["holds"] is True

    def test_fails_exit_one_with_witness(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "property", "--r", "3", "--s", "2", tuple_file("0\n1\n2\n")
        )
        assert code == 1
        assert payload["failure_witness"] == {
            "window": [1, 2, 3],
            "selection": [1, 2],
        }


class TestClassify:
    def test_type_b_pair_inverse(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "classify", "--s", "2", tuple_file("0\n0\n2\n-2\n")
        )
        assert code == 0
        assert payload["variant"] == "type_b"
        assert payload["k"] == 1
        assert payload["breakpoints"] == [1]

    def test_unclassified_exit_one(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "classify", "--s", "2", tuple_file("0\n0\n1\n3\n")
        )
        assert code == 1
        assert payload["variant"] == "unclassified"
        assert payload["property_holds"] is False

    def test_missing_zero_exit_two(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "classify", "--s", "2", tuple_file("1\n1\n2\n-2\n")
        )
        assert code == 2
        assert "error" in payload


class TestVerify:
    def test_round_trip(self, capsys, tuple_file, tmp_path):
        tf = tuple_file("0\n0\n2\n-2\n")
        code = main(["classify", "--s", "2", tf])
        cert_text = capsys.readouterr().out
        assert code == 0
        cert_file = tmp_path / "cert.json"
        cert_file.write_text(cert_text)
        code, payload, err = run_cli(
            capsys, "verify", "--s", "2", tf, str(cert_file)
        )
        assert code == 0
        assert payload == {"valid": True}
        assert "valid" in err

    def test_wrong_tuple_fails(self, capsys, tuple_file, tmp_path):
        tf = tuple_file("0\n0\n2\n-2\n")
        main(["classify", "--s", "2", tf])
        cert_text = capsys.readouterr().out
        cert_file = tmp_path / "cert.json"
        cert_file.write_text(cert_text)
        other = tuple_file("0\n0\n0\n3\n", name="other.txt")
        code, payload, _ = run_cli(capsys, "verify", "--s", "2", other, str(cert_file))
        assert code == 1
        assert payload == {"valid": False}

    def test_s_mismatch_fails(self, capsys, tuple_file, tmp_path):
        tf = tuple_file("0\n0\n2\n-2\n")
        main(["classify", "--s", "2", tf])
        cert_text = capsys.readouterr().out
        cert_file = tmp_path / "cert.json"
        cert_file.write_text(cert_text)
        code, payload, _ = run_cli(capsys, "verify", "--s", "3", tf, str(cert_file))
        assert code == 1
        assert payload == {"valid": False}


class TestQBasis:
    def test_certificate(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "qbasis", tuple_file("0 0\n2 0\n0 3\n1 1\n")
        )
        assert code == 0
        assert payload["indices"] == [2, 3]
        assert payload["multipliers"] == [2, 3]
        assert payload["exponents"][3] == [1, 1]

    def test_rank_zero_exit_two(self, capsys, tuple_file):
        code, payload, _ = run_cli(capsys, "qbasis", tuple_file("0\n0\n"))
        assert code == 2
        assert "error" in payload


class TestAdequateBasis:
    def test_refutation_exit_one(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "adequate-basis", tuple_file(EXAMPLE_FULL_RANK)
        )
        assert code == 1
        assert payload["exists"] is False
        assert payload["refutation"] == [
            {"indices": [1, 2, 3], "index": 2},
            {"indices": [1, 2, 4], "index": 5},
            {"indices": [1, 3, 4], "index": 6},
            {"indices": [2, 3, 4], "index": 3},
        ]

    def test_witness_exit_zero(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "adequate-basis", tuple_file("1 0\n0 1\n2 3\n")
        )
        assert code == 0
        assert payload["exists"] is True
        assert payload["witness"]["indices"] == [1, 2]
        assert payload["witness"]["multipliers"] == [1, 1]


class TestAudit:
    def test_all_pass(self, capsys, tuple_file):
        code, payload, err = run_cli(
            capsys, "audit", "--s", "2", tuple_file("0\n1\n1\n2\n")
        )
        assert code == 0
        assert payload["case"] == "beta"
        assert all(c["pass"] for c in payload["claims"])
        assert "all claims pass" in err

    def test_precondition_exit_two(self, capsys, tuple_file):
        code, payload, _ = run_cli(
            capsys, "audit", "--s", "2", tuple_file("0\n1\n2\n")
        )
        assert code == 2
        assert "error" in payload


class TestGenerate:
    def test_identity_type_a(self, capsys):
        code, payload, _ = run_cli(capsys, "generate", "--kind", "a", "--s", "3")
        assert code == 0
        assert payload["tuple"]["elements"] == [
            [0, 0], [0, 0], [1, 0], [1, 0], [0, 1], [0, 1],
        ]
        assert payload["spec"]["kind"] == "a"

    def test_type_b_flags(self, capsys):
        code, payload, _ = run_cli(
            capsys,
            "generate",
            "--kind", "b", "--s", "3", "--k", "1", "--breaks", "2",
            "--dim", "2", "--seed", "7", "--unimodular-bound", "3",
            "--permutation-seed", "1", "--translation", "4,-4",
        )
        assert code == 0
        assert len(payload["tuple"]["elements"]) == 6
        assert payload["spec"]["breakpoints"] == [2]
        assert payload["spec"]["translation"] == [4, -4]

    def test_invalid_spec_exit_two(self, capsys):
        code, payload, _ = run_cli(capsys, "generate", "--kind", "a", "--s", "4")
        assert code == 2
        assert "error" in payload


class TestEnumerate:
    def test_small_run_with_out(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code, payload, err = run_cli(
            capsys,
            "enumerate",
            "--s", "2", "--q", "3", "--dim", "1", "--bound", "2",
            "--jobs", "2", "--out", str(out),
        )
        assert code == 0
        assert payload["ok"] is True
        assert payload["with_property"] == 1
        assert json.loads(out.read_text()) == payload
        assert "1 with property" in err

    def test_budget_exit_three(self, capsys, monkeypatch):
        monkeypatch.setenv("ABTUPLE_BUDGET", "5")
        code, payload, _ = run_cli(
            capsys, "enumerate", "--s", "2", "--q", "3", "--dim", "1", "--bound", "1"
        )
        assert code == 3
        assert "error" in payload


class TestErrorPaths:
    def test_missing_file(self, capsys):
        code, payload, _ = run_cli(capsys, "rank", "/nonexistent/file.txt")
        assert code == 2
        assert "error" in payload

    def test_malformed_tuple(self, capsys, tuple_file):
        code, payload, _ = run_cli(capsys, "rank", tuple_file("1 2\n3\n"))
        assert code == 2

    def test_console_script_wired(self):
        proc = subprocess.run(
            [sys.executable, "-m", "abtuple.cli", "generate", "--kind", "a", "--s", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["spec"]["s"] == 3
