from argparse import Namespace

import pytest
from loguru import logger

from levikit.context import RunContext
from levikit.formats.codec import content_sha256
from levikit.runner import LeviKitRunner


@pytest.fixture
def messages():
    captured = []
    sink = logger.add(lambda message: captured.append(message.record["message"]), level="DEBUG", format="{message}")
    yield captured
    logger.remove(sink)


def test_log_is_tagged_with_the_run_id(messages):
    ctx = RunContext("levi", run_id="0123456789abcdef")
    ctx.log("started")
    ctx.log("details", "DEBUG")
    assert messages == ["[01234567] started", "[01234567] details"]


def test_get_config_is_the_run_configuration(run_config):
    run_config.engine.depth_cap_slack = 9
    settings = RunContext("levi", run_config).get_config()
    assert settings["engine"]["depth_cap_slack"] == 9
    assert settings["engine"]["verify_after_levi"] is True


def test_inputs_are_read_once_and_hashed(tmp_path):
    path = tmp_path / "a.json"
    path.write_text("{}", encoding="utf-8")
    ctx = RunContext("validate")
    assert ctx.read_input(str(path)) == "{}"
    path.write_text("[]", encoding="utf-8")
    assert ctx.read_input(str(path)) == "{}"
    assert [record.sha256 for record in ctx.report.inputs] == [content_sha256("{}")]


def test_runner_logs_engine_settings(messages, run_config, capsys):
    assert LeviKitRunner(run_config).run("version", Namespace()) == 0
    assert any(m.endswith(f"Running version with engine settings {run_config.engine.model_dump()}") for m in messages)


def test_report_records_errors(tmp_path, capsys):
    code = LeviKitRunner().run("validate", Namespace(algebra=str(tmp_path / "absent.json")))
    assert code == 1
    assert "cannot read" in capsys.readouterr().err
