"""Loguru sink setup for command-line runs."""

from __future__ import annotations

import sys

from loguru import logger

from toricnest.config import LoggingSettings, Settings


def resolve_log_settings(settings: Settings, level: str | None = None) -> LoggingSettings:
    """
    The logging section to install: `level` when given, DEBUG in debug mode,
    the configured level otherwise.
    """
    if level is None and settings.debug:
        level = "DEBUG"
    if level is None:
        return settings.logging
    return settings.logging.model_copy(update={"level": level})


def configure_logging(log_settings: LoggingSettings) -> None:
    """
    Replace the default loguru sink with the configured ones.

    Args:
        log_settings: Level, format and destinations to install
    """
    logger.remove()
    logger.add(
        sys.stderr,
        level=log_settings.level.upper(),
        format=log_settings.format,
        serialize=log_settings.json_output,
    )
    if log_settings.file_path is not None:
        logger.add(
            log_settings.file_path,
            level=log_settings.level.upper(),
            format=log_settings.format,
            serialize=log_settings.json_output,
        )
