import json
from pathlib import Path

import pytest

from qoracle import cli

DATA = Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_deutsch_superposed_json(capsys):
    code, out, _ = run_cli(
        capsys, "run", "deutsch", "--variant", "superposed", "--output", "json"
    )
    assert code == 0
    report = json.loads(out)
    entries = report["state"]["amplitudes"]
    assert len(entries) == 8
    for entry in entries:
        assert abs(entry["re"]) == pytest.approx(0.353553, abs=1e-6)
        assert entry["im"] == 0.0
    assert report["state"]["layout"] == [["k", 2], ["x", 1], ["y", 1]]


def test_run_grover_sharp_deterministic_hit(capsys):
    code, out, _ = run_cli(
        capsys, "run", "grover", "--n", "2", "--variant", "sharp:10",
        "--output", "json",
    )
    assert code == 0
    report = json.loads(out)
    kets = {entry["ket"] for entry in report["state"]["amplitudes"]}
    assert kets == {"10|0", "10|1"}


def test_run_bad_sharp_label_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["run", "deutsch", "--variant", "sharp:0z"])
    assert excinfo.value.code == 2


def test_run_unknown_label_exits_1(capsys):
    code, _, err = run_cli(capsys, "run", "deutsch", "--variant", "sharp:000")
    assert code == 1
    assert "error" in err


def test_run_measure_is_seed_deterministic(capsys):
    args = ["run", "deutsch", "--measure", "--seed", "9", "--output", "json"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    report = json.loads(first)
    assert report["measurement"]["register"] == "x"
    assert report["measurement"]["seed_path"] == "9"
    # the collapsed dump is consistent with the outcome
    outcome = report["measurement"]["outcome"]
    for entry in report["post_state"]["amplitudes"]:
        assert entry["ket"].split("|")[1] == outcome


def test_run_text_output_renders_kets(capsys):
    code, out, _ = run_cli(capsys, "run", "deutsch")
    assert code == 0
    assert "+0.353553 |00|0|0>" in out
    assert "-0.353553 |10|1|0>" in out


def test_protocol_perfect_score(capsys):
    code, out, _ = run_cli(
        capsys, "protocol", "deutsch", "--trials", "100", "--seed", "7",
        "--output", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["correct_count"] == 100
    assert report["trials"] == 100


def test_protocol_audit_reports_zero_distance(capsys):
    code, out, _ = run_cli(
        capsys, "protocol", "grover", "--n", "2", "--trials", "50", "--audit",
        "--output", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["backdating_tv_distance"] < 1e-12


def test_protocol_zero_trials_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["protocol", "deutsch", "--trials", "0"])
    assert excinfo.value.code == 2


def test_protocol_output_deterministic(capsys):
    args = ["protocol", "deutsch_jozsa", "--n", "2", "--trials", "25",
            "--seed", "3", "--output", "json"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_env_seed_default(capsys, monkeypatch):
    monkeypatch.setenv("ORACLE_SEED", "9")
    _, via_env, _ = run_cli(capsys, "run", "deutsch", "--measure", "--output", "json")
    monkeypatch.delenv("ORACLE_SEED")
    _, via_flag, _ = run_cli(
        capsys, "run", "deutsch", "--measure", "--seed", "9", "--output", "json"
    )
    assert via_env == via_flag


def test_family_check(capsys):
    code, out, _ = run_cli(capsys, "family", "check", str(DATA / "deutsch.fam"))
    assert code == 0
    assert "4 modes: 2 balanced, 2 constant" in out


def test_family_show_prints_f_table(capsys):
    code, out, _ = run_cli(capsys, "family", "show", str(DATA / "deutsch.fam"))
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:]]
    assert rows == [
        ["00", "0", "0"], ["00", "1", "0"],
        ["01", "0", "0"], ["01", "1", "1"],
        ["10", "0", "1"], ["10", "1", "0"],
        ["11", "0", "1"], ["11", "1", "1"],
    ]


def test_family_malformed_reports_line(capsys):
    path = DATA / "malformed" / "05_table_too_short.fam"
    code, _, err = run_cli(capsys, "family", "check", str(path))
    assert code == 1
    assert "line 2:" in err


def test_family_missing_file_exits_1(capsys):
    code, _, err = run_cli(capsys, "family", "check", "/nonexistent.fam")
    assert code == 1
    assert "error" in err


def test_qubit_cap_flag(capsys):
    code, _, err = run_cli(
        capsys, "run", "grover", "--n", "2", "--qubit-cap", "4"
    )
    assert code == 1
    assert "cap" in err
