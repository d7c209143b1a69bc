"""Command-line contract: exit codes, determinism, golden outputs."""

import json

import pytest

from cyclosc.cli import main
from cyclosc.reports import emit_report


def run_cli(tmp_path, *args):
    out = tmp_path / "out.bin"
    rc = main([*args, "--output", str(out)])
    return rc, out.read_bytes() if out.exists() else b""


def test_inspect_payload(tmp_path):
    rc, body = run_cli(tmp_path, "inspect", "--lambda", "3", "--alpha", "1,-0.5", "--blocks", "4")
    assert rc == 0
    payload = json.loads(body)
    assert payload["schema_version"] == "1"
    assert payload["command"] == "inspect"
    assert payload["algebra"] == {"lambda": 3, "alpha": [1.0, -0.5, -0.5]}
    assert payload["results"]["ok"] is True
    assert payload["results"]["kappa"] == [[0.5, 0.0], [0.5, 0.0]]
    assert payload["results"]["fock_margins"] == [0.0, 2.0, 2.5]
    assert payload["timing_ms"] == 0
    names = [e["name"] for e in payload["residuals"]]
    assert names == sorted(names)


def test_spectrum_csv_golden(tmp_path):
    rc, body = run_cli(tmp_path, "spectrum", "--lambda", "3", "--alpha", "1,-0.5",
                       "--levels", "6", "--format", "csv")
    assert rc == 0
    assert body == (
        b"energy,k,mu,multiplicity\n"
        b"1.0,0,0,1\n"
        b"2.25,0,1,1\n"
        b"2.75,0,2,1\n"
        b"4.0,1,0,1\n"
        b"5.25,1,1,1\n"
        b"5.75,1,2,1\n"
    )


def test_verify_pass_and_fail_exit_codes(tmp_path):
    rc, body = run_cli(tmp_path, "verify", "--variant", "ssqm",
                       "--lambda", "2", "--alpha", "0.5", "--blocks", "6")
    assert rc == 0
    assert json.loads(body)["results"]["passed"] is True

    # generic parameters violate the cubic closure: full report, exit 2
    rc, body = run_cli(tmp_path, "verify", "--variant", "bd",
                       "--lambda", "3", "--alpha", "1,-0.5")
    assert rc == 2
    payload = json.loads(body)
    assert payload["results"]["passed"] is False
    assert payload["residuals"][0]["name"] == "cubic"


def test_order_flag_must_match_lambda(tmp_path, capsys):
    rc, _ = run_cli(tmp_path, "verify", "--variant", "pssqm", "--p", "2",
                    "--mu", "0", "--lambda", "3", "--alpha", "1,-0.5", "--blocks", "5")
    assert rc == 0
    rc = main(["verify", "--variant", "pssqm", "--p", "3",
               "--lambda", "3", "--alpha", "1,-0.5"])
    assert rc == 1
    assert "inconsistent" in capsys.readouterr().err


def test_infeasible_point_is_structured_error(tmp_path):
    rc, body = run_cli(tmp_path, "inspect", "--lambda", "3", "--alpha", "-2.5,0.2")
    assert rc == 2
    payload = json.loads(body)
    assert payload["error"]["type"] == "FockConditionViolated"
    assert "beta_1" in payload["error"]["message"]


def test_parameterizations_are_exclusive():
    with pytest.raises(SystemExit) as exc:
        main(["inspect", "--lambda", "2", "--alpha", "0.5", "--kappa", "0.5"])
    assert exc.value.code == 1


def test_malformed_grid_axis():
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--lambda", "2", "--grid", "a:b:c"])
    assert exc.value.code == 1


def test_format_choices_per_command():
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--lambda", "2", "--alpha", "0.5", "--format", "jsonl"])
    assert exc.value.code == 1


def test_scan_requires_grid(capsys):
    assert main(["scan", "--lambda", "2"]) == 1
    assert "grid" in capsys.readouterr().err


def test_negative_option_values(tmp_path):
    rc, _ = run_cli(tmp_path, "inspect", "--lambda", "3", "--alpha", "-0.5,1")
    assert rc == 0
    rc, body = run_cli(tmp_path, "scan", "--lambda", "2",
                       "--grid", "-1.5:1.5:1.5", "--format", "jsonl")
    assert rc == 0
    assert len(body.splitlines()) == 3


def test_scan_jsonl_records_infeasible_lines(tmp_path):
    rc, body = run_cli(tmp_path, "scan", "--lambda", "2",
                       "--grid", "-1.5:0.5:1.0", "--format", "jsonl")
    assert rc == 0
    rows = [json.loads(line) for line in body.splitlines()]
    assert [row["status"] for row in rows] == ["fock-violated", "ok", "ok"]
    assert rows[0]["detail"] == "mu=1"
    assert rows[1]["pattern"]["kind"] == "nondegenerate"


def test_complex_kappa_parsing(tmp_path):
    rc, body = run_cli(tmp_path, "inspect", "--lambda", "3",
                       "--kappa", "0.3+0.2i,0.3-0.2i")
    assert rc == 0
    alpha = json.loads(body)["algebra"]["alpha"]
    assert abs(sum(alpha)) < 1e-12


def test_documented_commands_are_deterministic(tmp_path):
    commands = [
        ("inspect", "--lambda", "3", "--alpha", "1,-0.5", "--blocks", "5"),
        ("spectrum", "--lambda", "3", "--alpha", "0,0", "--levels", "9", "--format", "csv"),
        ("spectrum", "--lambda", "2", "--kappa", "0.5", "--levels", "6"),
        ("verify", "--variant", "pssqm", "--p", "2", "--mu", "0",
         "--lambda", "3", "--alpha", "1,-0.5", "--blocks", "5"),
        ("scan", "--lambda", "3", "--grid", "-1.5:1.5:1.5", "--grid", "-1.5:1.5:1.5",
         "--format", "jsonl"),
    ]
    for args in commands:
        _, first = run_cli(tmp_path, *args)
        _, second = run_cli(tmp_path, *args)
        assert first == second


def test_json_round_trip_is_lossless(tmp_path):
    for args in (
        ("inspect", "--lambda", "3", "--alpha", "1,-0.5"),
        ("verify", "--variant", "pseudo1", "--lambda", "3", "--alpha", "1,-0.5",
         "--mu", "0", "--eta", "0.5"),
    ):
        _, body = run_cli(tmp_path, *args)
        payload = json.loads(body)
        assert emit_report(payload, "json") == body  # parse -> emit is the identity


def test_stdout_output(capfdbinary):
    assert main(["inspect", "--lambda", "2", "--alpha", "0.5"]) == 0
    out, _ = capfdbinary.readouterr()
    assert json.loads(out)["command"] == "inspect"


def test_timing_flag_opt_in(tmp_path):
    _, body = run_cli(tmp_path, "inspect", "--lambda", "2", "--alpha", "0.5", "--timing")
    assert json.loads(body)["timing_ms"] >= 0
