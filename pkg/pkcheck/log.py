"""
pkcheck.log
===========

Logging setup for the command-line tools. Library modules only call
``logging.getLogger(__name__)``; handlers are installed here.
"""

from __future__ import annotations

import logging
import os

from rich.console import Console
from rich.logging import RichHandler

ENV_LEVEL = "PKCHECK_LOG_LEVEL"

_LEVELS = {-1: logging.ERROR, 0: logging.WARNING, 1: logging.INFO}


def level_for(verbosity: int) -> int:
    """-1 quiet, 0 default, 1 ``-v``, 2+ ``-vv``."""
    if verbosity == 0:
        env = os.environ.get(ENV_LEVEL, "").strip().upper()
        if env:
            value = logging.getLevelName(env)
            if isinstance(value, int):
                return value
    if verbosity >= 2:
        return logging.DEBUG
    return _LEVELS.get(max(verbosity, -1), logging.WARNING)


def configure_logging(verbosity: int = 0) -> logging.Logger:
    logger = logging.getLogger("pkcheck")
    for h in list(logger.handlers):
        if isinstance(h, RichHandler):
            logger.removeHandler(h)
    handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        show_path=False,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level_for(verbosity))
    logger.propagate = False
    return logger
