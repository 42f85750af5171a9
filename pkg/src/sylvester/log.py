from __future__ import annotations

import logging
import sys
from typing import Optional, TextIO

_FORMAT = "[%(name)s] %(message)s"
_ROOT = "sylvester"


class _TagFilter(logging.Filter):
    """Strips the package prefix so lines read ``[SIEVE] ...``."""

    def filter(self, record: logging.LogRecord) -> bool:
        if record.name.startswith(_ROOT + "."):
            record.name = record.name[len(_ROOT) + 1 :]
        return True


def get_logger(tag: str) -> logging.Logger:
    return logging.getLogger(f"{_ROOT}.{tag}")


def configure_logging(level: str = "WARNING", stream: Optional[TextIO] = None) -> None:
    root = logging.getLogger(_ROOT)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler.addFilter(_TagFilter())
    root.addHandler(handler)
    root.setLevel(level.upper())
    root.propagate = False
