# pylint: disable=protected-access
import logging
import os
from collections.abc import Iterator
from contextlib import contextmanager
from typing import cast

DEBUG_WARNING = 15
ULTRA_VERBOSE = -10

LEVEL_ENV_VAR = "SHARPCQA_LOG_LEVEL"


def level_from_env(value: str | None) -> int:
    """The logging level named by `value`: an integer, a level name in any case, or INFO when unset or unknown"""
    if value is None:
        return logging.INFO
    if value.lstrip("-").isdigit():
        return int(value)
    return logging._nameToLevel.get(value.upper(), logging.INFO)


class _BelowWarnings(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        return record.levelno < DEBUG_WARNING


class Logger(logging.Logger):
    """A logger whose level is fixed by the environment variable SHARPCQA_LOG_LEVEL.

    Assigning `level` or calling `setLevel` has no effect; the level is read once, on first use.
    """

    @contextmanager
    def ignore_warnings(self) -> Iterator["Logger"]:
        """Drops records at DEBUG_WARNING and above while the context is active.

        with log.ignore_warnings():
            log.debug_warning("this advisory is not shown")
        """
        warning_filter = _BelowWarnings()
        self.addFilter(warning_filter)
        try:
            yield self
        finally:
            self.removeFilter(warning_filter)

    def debug_warning(self, msg: str, *args: object, **kwargs: object) -> None:
        """Logs `msg` at the DEBUG_WARNING level, between DEBUG and INFO"""
        if self.isEnabledFor(DEBUG_WARNING):
            self._log(DEBUG_WARNING, msg, args, **kwargs)  # type: ignore[arg-type]

    # pylint: disable=attribute-defined-outside-init
    @property
    def level(self) -> int:
        if not hasattr(self, "_level"):
            self._level = level_from_env(os.getenv(LEVEL_ENV_VAR))
        return self._level

    @level.setter
    def level(self, value: int) -> None:  # pylint: disable=unused-argument
        return


class SharpCQAFormatter(logging.Formatter):
    """Prefixes every record with a green `SharpCQA` tag and colors the bracketed level name"""

    COLORS = {
        logging.DEBUG: "\x1b[38;2;123;131;191m",
        DEBUG_WARNING: "\x1b[38;2;175;0;215m",
        logging.WARNING: "\x1b[38;2;255;212;0m",
        logging.ERROR: "\x1b[38;2;255;40;40m",
    }
    RESET = "\x1b[0m"
    PREFIX = f"\x1b[38;2;46;139;87;1mSharpCQA {RESET}"

    def format(self, record: logging.LogRecord) -> str:
        record.levelname = f"{self.COLORS.get(record.levelno, '')}[{record.levelname}]{self.RESET}"
        return f"{self.PREFIX}{super().format(record)}"


def _make_logger() -> Logger:
    logging.addLevelName(DEBUG_WARNING, "DEBUG WARNING")
    logging.addLevelName(ULTRA_VERBOSE, "ULTRA_VERBOSE")
    logger = Logger("sharpcqa")
    # file and line only at the most verbose level
    fmt = "%(pathname)s:%(lineno)d %(levelname)s %(message)s" if logger.level <= ULTRA_VERBOSE else "%(levelname)s %(message)s"
    handler = logging.StreamHandler()
    handler.setFormatter(SharpCQAFormatter(fmt))
    logger.addHandler(handler)
    return logger


if "sharpcqa" not in logging.getLogger().manager.loggerDict:
    log = _make_logger()
else:
    log = cast(Logger, logging.getLogger().manager.loggerDict["sharpcqa"])
