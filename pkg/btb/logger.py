import sys
import datetime
from typing import Optional, TextIO

from btb import config


DEBUG = 1
INFO = 2
WARNING = 3
ERROR = 4

LEVEL_NAMES = {
    DEBUG: "DEBUG",
    INFO: "INFO",
    WARNING: "WARNING",
    ERROR: "ERROR",
}


def _format_field(value) -> str:
    text = str(value)
    return repr(text) if not text or " " in text else text


class Logger:
    """
    Line logger for stderr.

    Keyword arguments are appended as `key=value` fields:

        Logger("ball").info("shell done", distance=2, chambers=16)
        # 2026-01-01T12:00:00.000000: INFO: ball: shell done distance=2 chambers=16

    Debug lines are only written when `BTB_DEBUG` is set.
    """
    def __init__(self, name: str, stream: Optional[TextIO] = None):
        self._name = name
        self._stream = stream

    def log(self, level: int, message: str, **fields):
        if level == DEBUG and not config.DEBUG:
            return
        parts = [self._prefix(level), str(message)]
        parts.extend(f"{key}={_format_field(value)}" for key, value in fields.items())
        stream = self._stream or sys.stderr
        stream.write(" ".join(parts) + "\n")
        stream.flush()

    def debug(self, message: str, **fields):
        self.log(DEBUG, message, **fields)

    def info(self, message: str, **fields):
        self.log(INFO, message, **fields)

    def warning(self, message: str, **fields):
        self.log(WARNING, message, **fields)

    def error(self, message: str, **fields):
        self.log(ERROR, message, **fields)

    def _prefix(self, level: int) -> str:
        dt = datetime.datetime.now(datetime.timezone.utc).replace(tzinfo=None)
        return f"{dt.isoformat()}: {LEVEL_NAMES.get(level, level)}: {self._name}:"


log = Logger("main")
