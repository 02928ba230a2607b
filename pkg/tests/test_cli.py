import json

import pytest

from levikit import __version__
from levikit.cli import build_parser, main
from levikit.reports import CheckResult, Report
from levikit.runner import get_available_commands


def emit(tmp_path, name):
    assert main(["catalog", "emit", name, "--out", str(tmp_path)]) == 0
    return tmp_path / f"{name}.algebra.json"


@pytest.mark.parametrize(
    "argv",
    [
        ["validate", "a.json"],
        ["radical", "a.json"],
        ["levi", "a.json"],
        ["verify", "a.json", "c.json"],
        ["split", "a.json", "--grading", "g.json"],
        ["init"],
        ["version"],
    ],
)
def test_parser_knows_every_command(argv):
    assert build_parser().parse_args(argv).command == argv[0]
    assert argv[0] in get_available_commands()


def test_grading_and_derivations_are_exclusive():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["levi", "a.json", "--grading", "g.json", "--derivations", "d.json"])


def test_no_command(capsys):
    assert main([]) == 1
    err = capsys.readouterr().err
    assert "No command provided" in err
    assert "catalog emit" in err


def test_version(capsys):
    assert main(["version"]) == 0
    assert f"levikit version: {__version__}" in capsys.readouterr().out


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "sl2_sd_v2_skewed" in out
    assert "heisenberg3" in out


def test_catalog_emit(tmp_path):
    emit(tmp_path, "sl2_sd_h3")
    written = sorted(p.name for p in tmp_path.iterdir())
    assert "sl2_sd_h3.algebra.json" in written
    assert "sl2_sd_h3.grading1.json" in written
    assert "sl2_sd_h3.derivations2.json" in written


def test_catalog_emit_unknown_name(tmp_path):
    assert main(["catalog", "emit", "sl5", "--out", str(tmp_path)]) == 1


def test_validate(tmp_path, capsys):
    algebra = emit(tmp_path, "gl2")
    capsys.readouterr()
    assert main(["validate", str(algebra)]) == 0
    assert "valid 4-dimensional Lie algebra" in capsys.readouterr().out


def test_validate_rejects_jacobi_failure(tmp_path):
    path = tmp_path / "bad.algebra.json"
    path.write_text(
        json.dumps(
            {
                "dim": 3,
                "names": ["x", "y", "z"],
                "brackets": [
                    {"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]},
                    {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]},
                ],
            }
        )
    )
    assert main(["validate", str(path)]) == 1


def test_malformed_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    assert main(["radical", str(path)]) == 1


def test_radical(tmp_path, capsys):
    algebra = emit(tmp_path, "gl2")
    capsys.readouterr()
    assert main(["radical", str(algebra)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"dim": 1, "radical_basis": [["0", "0", "0", "1"]]}


def test_levi_with_grading(tmp_path, capsys):
    algebra = emit(tmp_path, "sl2")
    capsys.readouterr()
    assert main(["levi", str(algebra), "--grading", str(tmp_path / "sl2.grading0.json")]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["levi_basis"]) == 3
    assert data["radical_basis"] == []
    assert all(data["checks"].values())


def test_levi_then_verify_on_skewed_entry(tmp_path):
    algebra = emit(tmp_path, "sl2_sd_v2_skewed")
    grading = str(tmp_path / "sl2_sd_v2_skewed.grading0.json")
    cert = str(tmp_path / "skewed.cert.json")
    assert main(["levi", str(algebra), "--grading", grading, "--certificate", cert]) == 0
    assert main(["verify", str(algebra), cert, "--grading", grading]) == 0


def test_failed_reverification_writes_nothing(tmp_path, monkeypatch):
    algebra = emit(tmp_path, "sl2_sd_v2")
    cert = tmp_path / "v2.cert.json"
    failing = Report(subject="certificate", checks=[CheckResult(name="complement", passed=False)])
    monkeypatch.setattr("levikit.runner.verify_certificate", lambda g, certificate: failing)
    derivations = str(tmp_path / "sl2_sd_v2.derivations0.json")
    assert main(["levi", str(algebra), "--derivations", derivations, "--certificate", str(cert)]) == 3
    assert not cert.exists()


def test_verify_needs_the_same_family(tmp_path):
    algebra = emit(tmp_path, "sl2_sd_v2")
    cert = str(tmp_path / "v2.cert.json")
    derivations = str(tmp_path / "sl2_sd_v2.derivations0.json")
    assert main(["levi", str(algebra), "--derivations", derivations, "--certificate", cert]) == 0
    assert main(["verify", str(algebra), cert, "--derivations", derivations]) == 0
    assert main(["verify", str(algebra), cert]) == 1


def test_verify_rejects_a_tampered_levi(tmp_path, capsys):
    algebra = emit(tmp_path, "sl2")
    cert = tmp_path / "sl2.cert.json"
    assert main(["levi", str(algebra), "--certificate", str(cert)]) == 0
    data = json.loads(cert.read_text())
    data["levi_basis"] = [["1", "0", "0"], ["0", "1", "0"]]
    cert.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(algebra), str(cert)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_irrational_spectrum_is_out_of_scope(tmp_path):
    algebra = emit(tmp_path, "abelian2")
    derivations = tmp_path / "rotation.json"
    derivations.write_text(json.dumps({"matrices": [[["0", "-1"], ["1", "0"]]], "labels": ["rot"]}))
    assert main(["levi", str(algebra), "--derivations", str(derivations)]) == 2


def test_split(tmp_path):
    algebra = emit(tmp_path, "sl2_sd_h3")
    out = tmp_path / "split.json"
    assert main(["split", str(algebra), "--grading", str(tmp_path / "sl2_sd_h3.grading0.json"), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert len(data["splits"]) == 2


def test_split_requires_a_family(tmp_path):
    with pytest.raises(SystemExit):
        main(["split", "a.json"])


def test_report_json(tmp_path):
    algebra = emit(tmp_path, "heisenberg3")
    report = tmp_path / "report.json"
    assert main(["--report-json", str(report), "levi", str(algebra), "--derivations", str(tmp_path / "heisenberg3.derivations0.json")]) == 0
    data = json.loads(report.read_text())
    assert data["command"] == "levi"
    assert data["exit_code"] == 0
    assert [r["path"] for r in data["inputs"]] == [str(algebra), str(tmp_path / "heisenberg3.derivations0.json")]
    assert data["trace"]
    assert {c["name"] for c in data["checks"]} >= {"jacobi", "complement", "invariance"}


def test_report_records_the_error(tmp_path):
    report = tmp_path / "report.json"
    assert main(["--report-json", str(report), "validate", str(tmp_path / "absent.json")]) == 1
    data = json.loads(report.read_text())
    assert data["exit_code"] == 1
    assert "cannot read" in data["error"]


def test_init(tmp_path):
    target = tmp_path / "config"
    assert main(["init", "--dir", str(target)]) == 0
    assert sorted(p.name for p in target.iterdir()) == ["engine.json", "logging.json", "suite.json"]


def test_config_option(tmp_path):
    target = tmp_path / "config"
    assert main(["init", "--dir", str(target)]) == 0
    (target / "engine.json").write_text(json.dumps({"depth_cap_dim_factor": 0, "depth_cap_family_factor": 0, "depth_cap_slack": 0}))
    algebra = emit(tmp_path, "sl2_sd_h3")
    derivations = str(tmp_path / "sl2_sd_h3.derivations0.json")
    assert main(["--config", str(target), "levi", str(algebra), "--derivations", derivations]) == 3
