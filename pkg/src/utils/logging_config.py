"""
Centralized Logging Configuration
Provides consistent logging across all kernel modules with stderr and rotating file handlers
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-25s | %(funcName)-20s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    log_dir: str = "data/logs",
    log_file: str = "kernel.log",
    console_level: int = logging.WARNING,
    file_level: int = logging.DEBUG,
    max_bytes: int = 10 * 1024 * 1024,  # 10 MB
    backup_count: int = 5,
    log_to_file: bool = True,
) -> logging.Logger:
    """
    Configure application-wide logging.

    Console output goes to stderr so that command results on stdout stay
    byte-identical between runs.

    Args:
        log_dir: Directory to store log files
        log_file: Name of the log file
        console_level: Logging level for console output (WARNING by default)
        file_level: Logging level for file output (DEBUG by default)
        max_bytes: Maximum size of log file before rotation (10 MB default)
        backup_count: Number of backup log files to keep
        log_to_file: If False, only the console handler is installed

    Returns:
        Root logger instance
    """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)  # handlers filter

    # Avoid duplicate handlers when called repeatedly (tests, batch runs)
    logger.handlers.clear()

    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    log_path: Optional[Path] = None
    if log_to_file:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_path / log_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        file_handler.setLevel(file_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.debug("=" * 80)
    logger.debug("Logging system initialized")
    if log_path is not None:
        logger.debug(f"Log file: {log_path / log_file}")
    logger.debug(f"Console level: {logging.getLevelName(console_level)}")
    logger.debug("=" * 80)

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance for a specific module.

    Args:
        name: Module name (typically __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
