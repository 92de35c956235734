import json

import pytest

from qgap.cli import main

D4_GRAM = "4\n2 -1 0 0\n-1 2 -1 -1\n0 -1 2 0\n0 -1 0 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_delta_inverse(self, capsys):
        code, out, _ = run(capsys, "expand", "Delta^-1", "--prec", "3")
        assert code == 0
        assert out.strip() == "val -1: [1, 24, 324]"

    def test_g4(self, capsys):
        code, out, _ = run(capsys, "expand", "G(4)", "--prec", "2")
        assert code == 0
        assert out.strip() == "val 0: [1, 240]"

    def test_fraction_rendering(self, capsys):
        code, out, _ = run(capsys, "expand", "G(12)", "--prec", "2")
        assert code == 0
        assert "65520/691" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "expand", "j", "--prec", "2", "--json")
        data = json.loads(out)
        assert data["valuation"] == -1
        assert data["coefficients"] == ["1", "744"]

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "expand", "Delta^0")
        assert code == 2
        assert "position" in err

    def test_bad_prec(self, capsys):
        code, _, err = run(capsys, "expand", "Delta", "--prec", "0")
        assert code == 2


class TestC0:
    def test_delta_inverse(self, capsys):
        code, out, _ = run(capsys, "c0", "Delta^-1")
        assert code == 0
        assert out.strip() == "24"

    def test_holomorphic(self, capsys):
        code, out, _ = run(capsys, "c0", "Delta")
        assert code == 0
        assert out.strip() == "0"


class TestSurvey:
    def test_table(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "families": [{"template": "Delta^-{a}", "ranges": {"a": [1, 4]}}]
        }))
        code, out, _ = run(capsys, "survey", str(cfg))
        assert code == 0
        assert "Delta^-3" in out
        assert "PASS=4" in out

    def test_json_lines(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "families": [{"template": "j^{a}", "ranges": {"a": [1, 2]}}]
        }))
        code, out, _ = run(capsys, "survey", str(cfg), "--json")
        lines = out.strip().splitlines()
        assert code == 0
        records = [json.loads(x) for x in lines]
        assert records[0]["expr"] == "j^1"
        assert "summary" in records[-1]

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "survey", "/nonexistent/cfg.json")
        assert code == 2

    def test_malformed_json_reports_line(self, tmp_path, capsys):
        cfg = tmp_path / "bad.json"
        cfg.write_text("{ not json }")
        code, _, err = run(capsys, "survey", str(cfg))
        assert code == 2
        assert ":1:" in err


class TestGap:
    def test_small_run(self, capsys):
        code, out, _ = run(capsys, "gap", "--hmax", "8", "--combos", "2")
        assert code == 0
        assert "seed=" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "gap", "--hmax", "6", "--combos", "1",
                           "--json")
        lines = [json.loads(x) for x in out.strip().splitlines()]
        assert code == 0
        assert lines[0]["verdict"] == "PASS"
        assert lines[-1]["failed"] == 0


class TestThetaMinima:
    def test_theta(self, tmp_path, capsys):
        gram = tmp_path / "d4.gram"
        gram.write_text(D4_GRAM)
        code, out, _ = run(capsys, "theta", str(gram), "--terms", "3")
        assert code == 0
        assert out.splitlines() == ["0\t1", "1\t24", "2\t24", "3\t96"]

    def test_minima(self, tmp_path, capsys):
        gram = tmp_path / "d4.gram"
        gram.write_text(D4_GRAM)
        code, out, _ = run(capsys, "minima", str(gram))
        assert code == 0
        assert out.strip() == "min=2 bound=4 PASS"

    def test_minima_not_applicable(self, tmp_path, capsys):
        gram = tmp_path / "a1.gram"
        gram.write_text("1\n2\n")
        code, out, _ = run(capsys, "minima", str(gram))
        assert code == 0
        assert "NOT_APPLICABLE" in out

    def test_rank_cap(self, tmp_path, capsys):
        rows = ["17"] + [" ".join("2" if i == j else "0" for j in range(17))
                         for i in range(17)]
        gram = tmp_path / "big.gram"
        gram.write_text("\n".join(rows) + "\n")
        code, _, err = run(capsys, "theta", str(gram), "--terms", "1")
        assert code == 2
        assert "max-rank" in err

    def test_gram_error_line_number(self, tmp_path, capsys):
        gram = tmp_path / "bad.gram"
        gram.write_text("2\n2 0\n0 x\n")
        code, _, err = run(capsys, "theta", str(gram))
        assert code == 2
        assert ":3:" in err


class TestVerify:
    def test_identities(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "identities")
        assert code == 0
        assert "suite identities: PASS" in out

    def test_theorems4_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "theorems4", "--json")
        lines = [json.loads(x) for x in out.strip().splitlines()]
        assert code == 0
        assert lines[-1] == {"suite": "theorems4", "verdict": "PASS"}

    def test_satz(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "satz")
        assert code == 0
        assert "suite satz: PASS" in out
