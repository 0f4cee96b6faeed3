import logging

from rich.logging import RichHandler

from pkcheck.log import ENV_LEVEL, configure_logging, level_for


def test_levels(monkeypatch):
    monkeypatch.delenv(ENV_LEVEL, raising=False)
    assert level_for(-1) == logging.ERROR
    assert level_for(0) == logging.WARNING
    assert level_for(1) == logging.INFO
    assert level_for(3) == logging.DEBUG


def test_env_sets_the_default_only(monkeypatch):
    monkeypatch.setenv(ENV_LEVEL, "debug")
    assert level_for(0) == logging.DEBUG
    assert level_for(-1) == logging.ERROR
    monkeypatch.setenv(ENV_LEVEL, "nonsense")
    assert level_for(0) == logging.WARNING


def test_configure_is_idempotent():
    configure_logging(1)
    logger = configure_logging(1)
    assert sum(isinstance(h, RichHandler) for h in logger.handlers) == 1
    assert logger.level == logging.INFO
