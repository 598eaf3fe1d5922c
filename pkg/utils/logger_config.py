"""
Logging setup for SymCover.

Command output goes to stdout; log records go to stderr or to a rotating
log file, so piping a count table never mixes in log lines.
"""
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, TextIO

DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEBUG_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(module)s.%(funcName)s:%(lineno)d - %(message)s"
DEFAULT_LOG_LEVEL = "INFO"


def _file_handler(log_file: str, max_bytes: int, backup_count: int) -> Optional[logging.Handler]:
    path = Path(log_file)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        return RotatingFileHandler(path, maxBytes=max_bytes, backupCount=backup_count, encoding='utf-8')
    except OSError as e:
        print(f"Cannot log to {log_file} ({e}); logging to the console instead.", file=sys.stderr)
        return None


def setup_logging(log_level_str: str = DEFAULT_LOG_LEVEL,
                  log_file: Optional[str] = None,
                  max_bytes: int = 10 * 1024 * 1024,
                  backup_count: int = 5,
                  stream: Optional[TextIO] = None) -> logging.Handler:
    """
    Configures the root logger. Safe to call repeatedly; earlier handlers are
    closed and replaced.

    Args:
        log_level_str (str): Level name such as 'DEBUG' or 'INFO'. Unknown
            names fall back to INFO.
        log_file (str, optional): Rotating log file; missing parent
            directories are created. If None, logs go to `stream`.
        max_bytes (int): Size at which the log file rotates.
        backup_count (int): Rotated files to keep.
        stream (TextIO, optional): Console stream, stderr by default.

    Returns:
        logging.Handler: The handler now attached to the root logger.
    """
    log_level = getattr(logging, log_level_str.upper(), logging.INFO)
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    handler = _file_handler(log_file, max_bytes, backup_count) if log_file else None
    if handler is None:
        handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(logging.Formatter(DEBUG_LOG_FORMAT if log_level <= logging.DEBUG else DEFAULT_LOG_FORMAT))
    root_logger.addHandler(handler)

    # numpy overflow and divide warnings from the sweeps end up in the same log
    logging.captureWarnings(True)
    logging.debug(f"Logging at level {log_level_str} to {log_file or 'the console'}")
    return handler
