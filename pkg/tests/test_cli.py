"""End-to-end CLI tests driving main() directly: formats, exit codes, determinism."""

import io
import json
import math

import numpy as np

from permharmonic.cli import main
from permharmonic.transform import build_plan, transform


def run_cli(argv, capsys, monkeypatch, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_transform_text_from_stdin(capsys, monkeypatch):
    code, out, err = run_cli(["transform"], capsys, monkeypatch, stdin="1 0 0\n")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert len(lines) == 3
    got = np.array([float(s) for s in lines])
    assert np.max(np.abs(got - transform(np.array([1.0, 0.0, 0.0])))) <= 1e-12


def test_transform_csv_round_trips_exactly(capsys, monkeypatch):
    # 17 significant digits pin the double exactly
    code, out, _ = run_cli(
        ["transform", "--format", "csv"], capsys, monkeypatch, stdin="0.1, -2.5, 3.75, 4"
    )
    assert code == 0
    got = np.array([float(s) for s in out.strip().split(",")])
    assert np.array_equal(got, transform(np.array([0.1, -2.5, 3.75, 4.0])))


def test_transform_json_counted(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["transform", "--counted", "--format", "json"], capsys, monkeypatch, stdin="1 2 3 4 5"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "transform"
    assert payload["n"] == 5
    assert payload["inverse"] is False
    assert payload["mult"] == 8 and payload["add"] == 8
    assert np.allclose(payload["output"], transform(np.arange(1.0, 6.0)), atol=1e-15)


def test_transform_counted_text_appends_json_line(capsys, monkeypatch):
    code, out, _ = run_cli(["transform", "--counted"], capsys, monkeypatch, stdin="1 0 0")
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[-1]) == {"n": 3, "mult": 4, "add": 4}


def test_transform_counted_inverse_conflict(capsys, monkeypatch):
    code, out, err = run_cli(
        ["transform", "--counted", "--inverse"], capsys, monkeypatch, stdin="1 0"
    )
    assert code == 2
    assert err.startswith("error:")


def test_transform_inverse_round_trip_via_files(tmp_path, capsys, monkeypatch):
    x = np.array([0.5, -1.25, 2.0, 7.5])
    src = tmp_path / "x.txt"
    src.write_text(" ".join(repr(float(v)) for v in x))
    code, out, _ = run_cli(["transform", str(src), "--format", "csv"], capsys, monkeypatch)
    assert code == 0
    mid = tmp_path / "spectrum.csv"
    mid.write_text(out)
    code, out, _ = run_cli(["transform", str(mid), "--inverse", "--format", "csv"], capsys, monkeypatch)
    assert code == 0
    back = np.array([float(s) for s in out.strip().split(",")])
    assert np.max(np.abs(back - x)) <= 1e-12


def test_transform_rejects_garbage(capsys, monkeypatch):
    code, _, err = run_cli(["transform"], capsys, monkeypatch, stdin="1 banana 3")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(["transform"], capsys, monkeypatch, stdin="42")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(["transform", str("/no/such/file")], capsys, monkeypatch)
    assert code == 2 and "error:" in err


def test_shift_matches_library(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["shift", "--perm", "2 1 3", "--format", "csv"], capsys, monkeypatch, stdin="1 2 3"
    )
    assert code == 0
    got = np.array([float(s) for s in out.strip().split(",")])
    plan = build_plan(3)
    want = transform(np.array([2.0, 1.0, 3.0]), plan)  # y[i] = x[sigma(i)]
    assert np.max(np.abs(got - want)) <= 1e-12


def test_shift_check_text(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["shift", "--perm", "3 1 4 2", "--check"], capsys, monkeypatch, stdin="1 2 3 4"
    )
    assert code == 0
    assert "check_deviation" in out and "[PASS]" in out


def test_shift_check_json(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["shift", "--perm", "2 3 1", "--check", "--format", "json"],
        capsys,
        monkeypatch,
        stdin="0.5 -0.25 4",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["perm"] == [2, 3, 1]
    assert payload["check_passed"] is True
    assert payload["check_deviation"] <= 1e-10


def test_shift_rejects_bad_permutations(capsys, monkeypatch):
    code, _, err = run_cli(
        ["shift", "--perm", "2 2 3"], capsys, monkeypatch, stdin="1 2 3"
    )
    assert code == 2 and "error:" in err
    code, _, err = run_cli(
        ["shift", "--perm", "2 1"], capsys, monkeypatch, stdin="1 2 3"
    )
    assert code == 2 and "degree" in err


def test_verify_coxeter_text_passes(capsys, monkeypatch):
    code, out, _ = run_cli(["verify", "--suite", "coxeter", "--n", "6"], capsys, monkeypatch)
    assert code == 0
    assert "overall: PASS" in out
    assert "elapsed_ns=" in out


def test_verify_json_schema_and_determinism(capsys, monkeypatch):
    argv = ["verify", "--suite", "theorem", "--n", "6", "--seed", "7", "--format", "json"]
    code1, out1, _ = run_cli(argv, capsys, monkeypatch)
    code2, out2, _ = run_cli(argv, capsys, monkeypatch)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical: no timing in JSON
    payload = json.loads(out1)
    assert payload["passed"] is True
    assert payload["suites"][0]["suite"] == "theorem"
    names = [c["name"] for c in payload["suites"][0]["checks"]]
    assert names and all(c["passed"] for c in payload["suites"][0]["checks"])


def test_verify_all_suite(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["verify", "--suite", "all", "--n", "4", "--format", "json"], capsys, monkeypatch
    )
    assert code == 0
    payload = json.loads(out)
    assert [s["suite"] for s in payload["suites"]] == [
        "coxeter",
        "orthogonality",
        "theorem",
        "prop1",
        "schur",
    ]
    assert payload["passed"] is True


def test_verify_tol_override_forces_failure(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["verify", "--suite", "coxeter", "--n", "4", "--tol", "-1"], capsys, monkeypatch
    )
    assert code == 1
    assert "overall: FAIL" in out


def test_verify_argument_validation(capsys, monkeypatch):
    cases = [
        ["verify", "--suite", "coxeter", "--n", "1"],
        ["verify", "--suite", "coxeter", "--n", "65"],
        ["verify", "--suite", "prop1", "--n", "12"],
        ["verify", "--suite", "schur", "--n", "2"],
    ]
    for argv in cases:
        code, _, err = run_cli(argv, capsys, monkeypatch)
        assert code == 2 and "error:" in err, argv
    code, _, err = run_cli(["verify", "--suite", "bogus", "--n", "4"], capsys, monkeypatch)
    assert code == 2  # argparse rejects the choice


def test_oracle_seeded_json_is_byte_identical(capsys, monkeypatch):
    argv = ["oracle", "--n", "4", "--seed", "11"]
    code1, out1, _ = run_cli(argv, capsys, monkeypatch)
    code2, out2, _ = run_cli(argv, capsys, monkeypatch)
    assert code1 == code2 == 0
    assert out1 == out2


def test_oracle_json_contents(capsys, monkeypatch):
    code, out, _ = run_cli(["oracle", "--n", "4", "--seed", "3"], capsys, monkeypatch)
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 4 and payload["seed"] == 3
    assert payload["violations"] == []
    assert set(payload["partitions"]) == {"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}
    assert payload["partitions"]["2,2"] <= payload["bound"]
    lam1 = math.factorial(3) * math.sqrt(4)
    assert abs(payload["lambda1"] - lam1) / lam1 <= 1e-9
    assert payload["block_split"] == [1, 3]


def test_oracle_input_file(tmp_path, capsys, monkeypatch):
    src = tmp_path / "f.txt"
    src.write_text("1 0 0 0 0")
    code, out, _ = run_cli(["oracle", "--input", str(src)], capsys, monkeypatch)
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 5 and payload["input"] == str(src)
    assert payload["violations"] == []


def test_oracle_text_format(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["oracle", "--n", "3", "--seed", "0", "--format", "text"], capsys, monkeypatch
    )
    assert code == 0
    assert "lambda1" in out and "overall: PASS" in out


def test_oracle_argument_validation(capsys, monkeypatch):
    for argv in (["oracle"], ["oracle", "--n", "2"], ["oracle", "--n", "9"]):
        code, _, err = run_cli(argv, capsys, monkeypatch)
        assert code == 2 and "error:" in err, argv


def test_bench_csv_counts_and_bounds(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["bench", "--n-list", "64", "--reps", "1", "--format", "csv"], capsys, monkeypatch
    )
    assert code == 0
    header, row = out.strip().splitlines()
    record = dict(zip(header.split(","), row.split(",")))
    assert record["n"] == "64"
    assert record["mult"] == "126" and record["add"] == "126"
    assert record["ops_total"] == "252"
    assert record["bound_cubic"] == "258048"
    assert record["bound_quadratic"] == "6048"
    assert int(record["fast_ns"]) > 0 and int(record["dense_ns"]) > 0


def test_bench_json(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["bench", "--n-list", "8,16", "--reps", "2", "--format", "json"], capsys, monkeypatch
    )
    assert code == 0
    payload = json.loads(out)
    assert [r["n"] for r in payload["rows"]] == [8, 16]
    assert all(r["ops_total"] == 2 * (2 * r["n"] - 2) for r in payload["rows"])


def test_bench_argument_validation(capsys, monkeypatch):
    cases = [
        ["bench", "--n-list", "abc"],
        ["bench", "--n-list", "1,4"],
        ["bench", "--n-list", ""],
        ["bench", "--n-list", "8", "--reps", "0"],
    ]
    for argv in cases:
        code, _, err = run_cli(argv, capsys, monkeypatch)
        assert code == 2 and "error:" in err, argv


def test_no_subcommand_is_usage_error(capsys, monkeypatch):
    assert run_cli([], capsys, monkeypatch)[0] == 2


def test_inverse_text_format(capsys, monkeypatch):
    spectrum = transform(np.array([1.0, 2.0, 3.0]))
    text = " ".join(repr(float(v)) for v in spectrum)
    code, out, _ = run_cli(["transform", "--inverse"], capsys, monkeypatch, stdin=text)
    assert code == 0
    got = np.array([float(s) for s in out.strip().splitlines()])
    assert np.max(np.abs(got - np.array([1.0, 2.0, 3.0]))) <= 1e-12
