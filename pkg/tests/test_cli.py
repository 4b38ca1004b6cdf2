"""CLI: exit codes, JSON reports, determinism, manifests."""

import json

import pytest

from exactlie import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    return code, doc


def test_run_simplicity_pass(capsys):
    code, doc = run_cli(capsys, "run", "simplicity", "--ring", "fp:3")
    assert code == 0
    assert doc["verdict"] == "pass" and doc["simple"] is True
    assert doc["schema"] == 1


def test_run_simplicity_nonsimple_field(capsys):
    code, doc = run_cli(capsys, "run", "simplicity", "--ring", "fq:3^2")
    assert code == 0  # the check passes: the sweep agrees with the criterion
    assert doc["simple"] is False
    assert "witness" in doc and set(doc["witness"]) == {"x", "y"}


def test_run_derivations(capsys):
    code, doc = run_cli(capsys, "run", "derivations", "--algebra", "lorentz",
                        "--ring", "fp:2")
    assert code == 0 and doc["dim"] == 12


def test_unknown_check_exit_2(capsys):
    code, doc = run_cli(capsys, "run", "definitely-not-a-check")
    assert code == 2
    assert doc["error"]["type"] == "UnknownCheck"


def test_size_limit_exit_3(capsys):
    code, doc = run_cli(capsys, "run", "simplicity", "--ring", "fp:13",
                        "--mode", "full", "--budget", "1000")
    assert code == 3
    assert doc["error"]["type"] == "SizeLimit"


def test_precondition_exit_4(capsys):
    code, doc = run_cli(capsys, "run", "lorentz-o4-iso", "--ring", "fp:7")
    assert code == 4
    assert doc["error"]["type"] == "NoSqrtMinusOne"


def test_failing_check_exit_1(capsys):
    code, doc = run_cli(capsys, "run", "negative-control", "--ring", "fp:5")
    assert code == 1
    assert doc["verdict"] == "fail"


def test_report_determinism_modulo_timing(capsys):
    args = ("run", "simplicity", "--ring", "fp:13", "--mode", "sampled",
            "--samples", "2000", "--seed", "31")
    _, doc1 = run_cli(capsys, *args)
    _, doc2 = run_cli(capsys, *args)
    doc1.pop("timing_ms")
    doc2.pop("timing_ms")
    assert json.dumps(doc1, sort_keys=True) == json.dumps(doc2, sort_keys=True)


def test_out_flag_writes_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _ = run_cli(capsys, "run", "cocycles", "--ring", "fp:5",
                      "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["verdict"] == "pass" and doc["dim"] == 4


def test_suite_pass_and_negative_control(tmp_path, capsys):
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps([
        {"check": "simplicity", "ring": "fp:3", "mode": "full"},
        {"check": "dup-aut", "ring": "fp:7"},
    ]))
    code, doc = run_cli(capsys, "suite", "--manifest", str(manifest))
    assert code == 0 and doc["verdict"] == "pass" and doc["count"] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([
        {"check": "simplicity", "ring": "fp:3", "mode": "full"},
        {"check": "negative-control", "ring": "fp:5"},
    ]))
    code, doc = run_cli(capsys, "suite", "--manifest", str(bad))
    assert code == 1 and doc["verdict"] == "fail"


def test_suite_empty_manifest(tmp_path, capsys):
    manifest = tmp_path / "empty.json"
    manifest.write_text("[]")
    code, doc = run_cli(capsys, "suite", "--manifest", str(manifest))
    assert code == 0 and doc["verdict"] == "pass" and doc["count"] == 0


def test_suite_manifest_parse_error(tmp_path, capsys):
    manifest = tmp_path / "broken.json"
    manifest.write_text("{not json")
    code, doc = run_cli(capsys, "suite", "--manifest", str(manifest))
    assert code == 2
    missing = tmp_path / "nope.json"
    code, doc = run_cli(capsys, "suite", "--manifest", str(missing))
    assert code == 2
    badfields = tmp_path / "fields.json"
    badfields.write_text(json.dumps([{"check": "simplicity", "rinng": "fp:3"}]))
    code, doc = run_cli(capsys, "suite", "--manifest", str(badfields))
    assert code == 2


def test_bundled_manifest_is_well_formed():
    from exactlie.checks import CHECKS, full_suite_manifest, CheckDescriptor

    entries = full_suite_manifest()
    assert entries
    for entry in entries:
        desc = CheckDescriptor.from_json(entry)
        assert desc.check in CHECKS
