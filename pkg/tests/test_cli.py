import hashlib
import json

import pytest

from edgespectra.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_spectrum_payload(capsys):
    code, out, err = run_cli(capsys, ["spectrum", "--n", "5", "--r", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["members"] == [4, 6, 10]
    assert payload["count"] == 3


def test_classify_payload(capsys):
    code, out, _ = run_cli(capsys, ["classify", "--m", "7", "--f", "12", "--check"])
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == 0
    assert any(t["rule"] == "iv" for t in payload["trace"])


def test_pell_payload(capsys):
    code, out, _ = run_cli(capsys, ["pell", "--k", "1"])
    assert code == 0
    payload = json.loads(out)
    assert (payload["t"], payload["m"], payload["f"]) == (222, 1112, 222111)


def test_manifest_digest_and_determinism(capsys):
    code1, out1, err1 = run_cli(capsys, ["minr", "--m", "4", "--f", "3"])
    code2, out2, err2 = run_cli(capsys, ["minr", "--m", "4", "--f", "3"])
    assert code1 == code2 == 0
    assert out1 == out2
    man = json.loads(err1.strip().splitlines()[-1])
    assert man["subcommand"] == "minr"
    assert man["output_digest"] == hashlib.sha256(out1.encode()).hexdigest()
    man2 = json.loads(err2.strip().splitlines()[-1])
    assert man["output_digest"] == man2["output_digest"]


def test_interval_gap_exit_code(capsys):
    code, out, _ = run_cli(capsys, ["interval", "--n", "30", "--r", "3",
                                    "--c-low", "0", "--c-high", "0", "--clip"])
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False and payload["first_gap"] == 150


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--n", "5"])  # missing --r
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_witness7_campaign_lines(capsys):
    code, out, _ = run_cli(capsys, ["witness7", "--n", "30000",
                                    "--samples", "5", "--seed", "3"])
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 5
    assert all(row["verified"] for row in rows)
    assert all(len(row["parts"]) == 7 for row in rows)


def test_witness7_campaign_thread_independent(capsys):
    argv = ["witness7", "--n", "30000", "--samples", "8", "--seed", "1"]
    _, out1, _ = run_cli(capsys, argv + ["--threads", "1"])
    _, out2, _ = run_cli(capsys, argv + ["--threads", "2"])
    assert out1 == out2


def test_witness7_out_of_interval_error(capsys):
    code, out, err = run_cli(capsys, ["witness7", "--n", "30000", "--m", "10"])
    assert code == 1
    assert "PreconditionViolated" in err


def test_repcount_csv_and_check(tmp_path, capsys):
    csv_path = tmp_path / "hist.csv"
    code, out, _ = run_cli(capsys, ["repcount", "--n", "60", "--N", "12",
                                    "--csv", str(csv_path), "--check"])
    assert code == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "m,R"
    assert all("," in line for line in lines[1:])


def test_spectrum_export(tmp_path, capsys):
    path = tmp_path / "spec.txt"
    code, out, _ = run_cli(capsys, ["spectrum", "--n", "6", "--r", "2",
                                    "--export", str(path)])
    assert code == 0
    from edgespectra.cliquespec import EdgeSpectrum, spectrum

    back = EdgeSpectrum.parse_export(path.read_text().strip().splitlines())
    assert back.mask == spectrum(6, 2).mask


def test_turan_and_closure_exit_codes(capsys):
    code, _, _ = run_cli(capsys, ["turan", "--n", "6", "--m", "3"])
    assert code == 0
    code, _, _ = run_cli(capsys, ["closure", "--n", "8", "--r", "2", "--m", "4"])
    assert code == 0


def test_three_squares_and_bennett(capsys):
    code, out, _ = run_cli(capsys, ["three-squares", "--v", "33", "--check"])
    assert code == 0
    assert json.loads(out)["decomp"] == [5, 2, 2]
    code, out, _ = run_cli(capsys, ["bennett", "--y-limit", "50", "--check"])
    assert code == 0
    assert json.loads(out)["solutions"] == [[3, 2]]


def test_abc_table(capsys):
    code, out, _ = run_cli(capsys, ["abc", "--k-max", "2"])
    assert code == 0
    rows = json.loads(out)
    assert [row["k"] for row in rows] == [1, 2]
    assert all(row["ABC"]["A"] and row["ABC"]["B"] and row["ABC"]["C"] for row in rows)


def test_abc_skip_reported(capsys):
    code, out, _ = run_cli(capsys, ["abc", "--k-max", "3"])
    assert code == 1  # k=3 exceeds the default exhaustive limit
    rows = json.loads(out)
    assert rows[2]["ABC"].get("error") == "SkippedExhaustive"


def test_arrow_and_snm(capsys):
    code, out, _ = run_cli(capsys, ["arrow", "--n", "5", "--e", "6",
                                    "--m", "3", "--f", "3", "--check"])
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is False
    assert len(payload["counterexample"]) == 6
    code, out, _ = run_cli(capsys, ["snm", "--n", "5", "--m", "3", "--f", "3"])
    assert json.loads(out)["members"] == [7, 8, 9, 10]


def test_witness_density_runs_exceptional(capsys):
    code, out, _ = run_cli(capsys, ["witness", "--n", "5", "--r", "2", "--m", "4",
                                    "--check"])
    assert code == 0
    assert json.loads(out)["parts"] == [3, 2]
    code, out, _ = run_cli(capsys, ["density", "--n", "50", "--r", "4", "--check"])
    assert code == 0
    assert json.loads(out)["bounds_ok"] is True
    code, out, _ = run_cli(capsys, ["runs", "--n", "4", "--m", "2", "--f", "0"])
    assert json.loads(out)["runs"] == [[0, 5]]
    code, out, _ = run_cli(capsys, ["exceptional", "--n", "120", "--N", "24",
                                    "--lo-margin", "500", "--hi-margin", "500"])
    assert code == 0
    payload = json.loads(out)
    assert "zeros_in_range" in payload and not payload["range_empty"]


def test_dm_and_concentration(capsys):
    code, out, _ = run_cli(capsys, ["dm", "--m", "8", "--f", "17", "--check"])
    assert code == 0
    assert json.loads(out)["witness"] is None
    code, out, _ = run_cli(capsys, ["concentration", "--N", "6", "--E", "5",
                                    "--n", "3", "--trials", "200"])
    assert code == 0
    payload = json.loads(out)
    assert payload["enum_mean"] == 1.0
    assert payload["expectation_identity_ok"] is True
