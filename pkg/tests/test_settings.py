import logging
import types

import pytest

from wittsum.conf import configure, get_setting, get_settings
from wittsum.conf.settings import Wittsum
from wittsum.exceptions import ImproperlyConfigured
from wittsum.logging import LoggingMixin, TaskLoggerMixin


def test_defaults():
    assert get_setting("WITTSUM.field_cap") == 2 ** 20
    assert get_setting("WITTSUM.dim_cap") == 3
    assert get_setting("WITTSUM.guard") is None
    assert get_setting("SCHEMA_VERSION") == 1


def test_override_restores(settings):
    with settings(smax=7, guard=None) as live:
        assert get_setting("WITTSUM.smax") == 7
        assert live.config["smax"] == 7
    assert get_setting("WITTSUM.smax") == 3


def test_override_casts_strings(settings):
    with settings(sum_budget="1000", tolerance="1e-6", threads="2"):
        assert get_setting("WITTSUM.sum_budget") == 1000
        assert get_setting("WITTSUM.tolerance") == 1e-6
        assert get_setting("WITTSUM.threads") == 2


def test_override_rejects(settings):
    with pytest.raises(KeyError):
        with settings(bogus=1):
            pass
    with pytest.raises(ImproperlyConfigured):
        with settings(field_cap="many"):
            pass
    assert get_setting("WITTSUM.field_cap") == 2 ** 20


def test_configure_once():
    get_settings()
    with pytest.raises(ImproperlyConfigured):
        configure()


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("WITTSUM", "field_cap=64,smax=2")
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    settings = Wittsum()()
    assert settings["field_cap"] == 64
    assert settings["smax"] == 2
    assert settings["dim_cap"] == 3
    assert settings.settings["LOG_LEVEL"] == "DEBUG"


def test_project_module():
    project = types.ModuleType("project_settings")
    project.WITTSUM = {"reconstruct_dmax": 4}
    project.LOG_LEVEL = "WARNING"
    settings = Wittsum()(project)
    assert settings["reconstruct_dmax"] == 4
    assert settings["precision"] == 50
    assert settings.settings["LOG_LEVEL"] == "WARNING"


def test_project_module_unknown_key():
    project = types.ModuleType("project_settings")
    project.WITTSUM = {"fieldcap": 4}
    with pytest.raises(KeyError):
        Wittsum()(project)


def test_logging_mixin():

    class Stage(TaskLoggerMixin):
        name = "stage"

    stage = Stage()
    assert stage.logger_name == "wittsum.stage"
    msg = stage.log_ok("S_1 = ζ^1")
    assert msg.startswith("stage")
    assert msg.endswith("S_1 = ζ^1")
    assert "OK" in msg

    class Plain(LoggingMixin):
        pass

    assert Plain().logger_name == "wittsum.plain"
    assert Plain().logger.level == logging.getLevelName(get_setting("LOG_LEVEL"))
