"""Logging setup for command-line runs."""

import logging
import sys
from typing import Optional

from theorykit.core.config import get_settings


def configure_logging(level: Optional[str] = None) -> None:
    """Configure the root logger on stderr.

    Library modules only create loggers; handlers are installed here, once per
    command-line invocation.
    """
    settings = get_settings()
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format=settings.log_format,
        stream=sys.stderr,
        force=True,
    )
