"""Logging utilities that cooperate with tqdm progress bars."""

import logging
import sys

from tqdm import tqdm

PACKAGE_LOGGER = "fracsym"
DEFAULT_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


class TqdmLoggingHandler(logging.Handler):
    """Logging handler that writes via tqdm.write() so progress bars stay intact."""

    def __init__(self, level: int = logging.NOTSET):
        super().__init__(level)
        self.setFormatter(logging.Formatter(DEFAULT_FORMAT))

    def emit(self, record: logging.LogRecord) -> None:
        try:
            msg = self.format(record)
            tqdm.write(msg, file=sys.stderr)
            self.flush()
        except (KeyboardInterrupt, SystemExit):
            raise
        except Exception:
            self.handleError(record)


def setup_logger(name: str) -> logging.Logger:
    """Return the logger for `name`; the package root gets the tqdm handler once."""
    root = logging.getLogger(PACKAGE_LOGGER)
    if not any(isinstance(h, TqdmLoggingHandler) for h in root.handlers):
        root.addHandler(TqdmLoggingHandler())
        root.propagate = False
    return logging.getLogger(name)


def set_level(level: str | int) -> None:
    """Set the level of the package logger, e.g. from FRACSYM_LOG_LEVEL."""
    if isinstance(level, str):
        resolved = logging.getLevelName(level.upper())
        if not isinstance(resolved, int):
            raise ValueError(f"Unknown log level: {level!r}")
        level = resolved
    logging.getLogger(PACKAGE_LOGGER).setLevel(level)
