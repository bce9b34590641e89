"""
Logging utilities for ptnfa.

Provides consistent logging setup across all modules.
"""
import logging
import sys
from typing import Optional

from ptnfa import config


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get a configured logger for a module.

    Args:
        name: Logger name (typically __name__).
        level: Log level override (uses config default if None).

    Returns:
        Configured logger instance.

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("Determinizing automaton")
    """
    logger = logging.getLogger(name)

    # Only configure if not already configured
    if not logger.handlers:
        level = level or config.LOG_LEVEL
        logger.setLevel(getattr(logging, level.upper()))

        # Reports go to stdout, so diagnostics go to stderr
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(getattr(logging, level.upper()))

        formatter = logging.Formatter(config.LOG_FORMAT)
        handler.setFormatter(formatter)

        logger.addHandler(handler)

    return logger


def set_log_level(level: str) -> None:
    """
    Change the level of every logger created through get_logger.

    Args:
        level: Level name such as "DEBUG" or "INFO".
    """
    numeric = getattr(logging, level.upper())
    for name, logger in logging.Logger.manager.loggerDict.items():
        if not name.startswith("ptnfa") or not isinstance(logger, logging.Logger):
            continue
        logger.setLevel(numeric)
        for handler in logger.handlers:
            handler.setLevel(numeric)


def log_progress(
    logger: logging.Logger,
    current: int,
    total: Optional[int] = None,
    prefix: str = "Progress",
    every_n: int = 10000
) -> None:
    """
    Log progress at regular intervals.

    Args:
        logger: Logger instance.
        current: Current item number (1-indexed).
        total: Total number of items, or None for open-ended searches.
        prefix: Message prefix.
        every_n: Log every N items.
    """
    if total is None:
        if current % every_n == 0:
            logger.debug(f"{prefix}: {current} explored")
        return

    if current % every_n == 0 or current == total:
        percent = (current / total) * 100 if total else 100.0
        logger.debug(f"{prefix}: {current}/{total} ({percent:.1f}%)")
