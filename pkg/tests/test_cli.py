import json

import pytest

from emeasure import cli


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_kempner_subcommand(capsys):
    code, doc = run_json(capsys, ["kempner", "--q", "6"])
    assert code == 0
    assert doc == {
        "q": "6",
        "S": "3",
        "P": "3",
        "factorization": [["2", 1], ["3", 1]],
    }


def test_kempner_oracle_check(capsys):
    code, doc = run_json(capsys, ["kempner", "--oracle-check", "--max", "500"])
    assert code == 0
    assert doc["mismatches"] == []


def test_interval_subcommand(capsys):
    code, doc = run_json(capsys, ["interval", "--n", "4"])
    assert code == 0
    assert doc["left"] == {"num": "65", "den": "24"}
    assert doc["right"] == {"num": "11", "den": "4"}


def test_interval_domain_error(capsys):
    code = cli.run(["interval", "--n", "0"])
    assert code == 1
    assert "n >= 1" in capsys.readouterr().err


def test_distance_with_bounds(capsys):
    code, doc = run_json(
        capsys,
        ["distance", "--p", "65", "--q", "24", "--digits", "5",
         "--bound", "1/120", "--bound", "1/24"],
    )
    assert code == 0
    assert doc["digits"] == "0.00994"
    assert doc["bounds"][0] == {"bound": "1/120", "distance_is": "greater"}
    assert doc["bounds"][1] == {"bound": "1/24", "distance_is": "less"}


def test_measure_verdict(capsys):
    code, doc = run_json(capsys, ["measure", "--p", "65", "--q", "24"])
    assert code == 0
    assert doc["holds"] is True
    assert doc["bound"] == {"num": "1", "den": "120"}

    code, doc = run_json(
        capsys, ["measure", "--p", "65", "--q", "24", "--bound", "prime-factor"]
    )
    assert code == 0
    assert doc["holds"] is False


def test_measure_corollary2(capsys):
    code, doc = run_json(capsys, ["measure", "--corollary2", "4"])
    assert code == 0
    assert doc["prime"] is False and doc["witness"] == ["65", "24"]


def test_measure_compare(capsys):
    code, doc = run_json(capsys, ["measure", "--compare", "--q", "720"])
    assert code == 0
    assert doc["stronger"] == "theorem1"


def test_convergents_subcommand(capsys):
    code, doc = run_json(capsys, ["convergents", "--count", "3"])
    assert code == 0
    assert [row["value"] for row in doc] == [
        {"num": "2", "den": "1"},
        {"num": "3", "den": "1"},
        {"num": "8", "den": "3"},
    ]


def test_partial_sums_csv(capsys):
    code = cli.run(["partial-sums", "--max-n", "4", "--check-convergent"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,s_n_num,s_n_den,q_n,full_factorial,is_convergent"
    assert lines[2] == "1,2,1,1,1,1"
    assert lines[4] == "3,8,3,3,0,1"
    assert lines[5] == "4,65,24,24,1,0"


def test_cantor_subcommand(capsys):
    code, doc = run_json(
        capsys, ["cantor", "--family", "unit", "--a0", "2", "--N", "3", "--classify"]
    )
    assert code == 0
    assert doc["partial_sum"] == {"num": "65", "den": "24"}
    assert doc["classification"] == "irrational"


def test_cantor_mask_and_custom_json(capsys, tmp_path):
    code, doc = run_json(
        capsys, ["cantor", "--family", "mask:10", "--N", "4", "--classify"]
    )
    assert code == 0
    assert doc["classification"] == "irrational"

    spec = {
        "a0": 3,
        "a_table": [1],
        "b_table": [2],
        "tail_mode": "all-zero",
    }
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code, doc = run_json(
        capsys, ["cantor", "--spec-json", str(path), "--N", "10", "--classify"]
    )
    assert code == 0
    assert doc["classification"] == "rational"
    assert doc["rational_value"] == {"num": "7", "den": "2"}


def test_density_subcommand(capsys):
    code, doc = run_json(capsys, ["density", "--x", "1000"])
    assert code == 0
    assert doc["count_S_neq_P"] == "127"
    assert doc["exceptions_S_neq_P"][0] == "4"


def test_density_determinism(capsys):
    code1 = cli.run(["density", "--x", "5000"])
    out1 = capsys.readouterr().out
    code2 = cli.run(["density", "--x", "5000"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2


def test_bad_cantor_spec_is_domain_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"a0": 0, "a_table": [9], "b_table": [2]}))
    code = cli.run(["cantor", "--spec-json", str(path)])
    assert code == 1


def test_resource_error_exit_code(capsys, monkeypatch):
    from emeasure import density

    original = density.density_report

    def tiny_report(x, workers=1, csv_path=None):
        return original(x, workers=workers, max_entries=10, csv_path=csv_path)

    monkeypatch.setattr(density, "density_report", tiny_report)
    code = cli.run(["density", "--x", "1000"])
    assert code == 2
    assert "resource" in capsys.readouterr().err


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit):
        cli.run(["interval", "--bogus", "1"])
