import json

import pytest

from permgrowth.cli import main


def test_pass_exit_code_and_json_output(capsys):
    assert main(["recon-verify", "--max-len", "5"]) == 0
    out, err = capsys.readouterr()
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert doc["artifacts"]["checked"] == 71
    # timing goes to stderr only, so stdout stays machine-readable
    assert "wall time" in err
    assert "wall time" not in out


def test_fail_exit_code(capsys):
    assert main(["xi-basis"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "fail"
    assert doc["artifacts"]["quoted_matches_claim"] is False


def test_classify_via_seq_flag(capsys):
    assert main(["classify", "--seq", "1,1,2,3,(4)"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["artifacts"]["realizable"] == "yes"
    assert doc["artifacts"]["growth"] == "2.305224"


def test_out_file_and_csv_format(tmp_path, capsys):
    target = tmp_path / "table1.csv"
    assert main(["table1", "--format", "csv", "--out", str(target)]) == 0
    out, _ = capsys.readouterr()
    assert out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "table,family,assignment,sequence,polynomial,growth,position"
    assert len(lines) == 12


def test_census_with_basis_file(tmp_path, capsys):
    basis = tmp_path / "basis.txt"
    basis.write_text("# Fibonacci counts\n2 3 1\n4 3 1 2\n4 3 2 1\n")
    assert main(["census", "--basis", str(basis), "--max-len", "8"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["artifacts"]["si_counts"] == [1, 1, 2, 3, 5, 8, 13, 21]


def test_usage_errors_exit_2(capsys):
    assert main(["census"]) == 2
    assert main(["classify"]) == 2
    assert main(["growth-rate"]) == 2
    assert main(["growth-rate", "--seq", "2,1"]) == 2  # illegal sequence
    assert main(["taper-verify", "--max-len", "7"]) == 2
    assert main(["recon-verify", "--jobs", "0"]) == 2
    assert main(["census", "--basis", "/nonexistent/file"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_unknown_campaign_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus-campaign"])
    assert exc.value.code == 2


def test_deterministic_output_files(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["accumulation", "--out", str(a)]) == 0
    assert main(["accumulation", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_eps_flag_parses_fractions_and_decimals(capsys):
    assert main(["accumulation", "--eps", "1/1000000"]) == 0
    capsys.readouterr()
    assert main(["accumulation", "--eps", "0.000001"]) == 0
    capsys.readouterr()
    with pytest.raises(SystemExit):
        main(["accumulation", "--eps", "not-a-number"])
