import json
import logging
import sys

from pythonjsonlogger.json import JsonFormatter

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


class ParamsTextFormatter(logging.Formatter):
    """Plain-text formatter that appends the structured ``params`` of a record."""

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        params = getattr(record, "params", None)
        if params:
            line += " " + json.dumps(params, sort_keys=True, default=str)
        return line


def _formatter(log_format: str) -> logging.Formatter:
    if log_format == "json":
        return JsonFormatter(LOG_FORMAT)
    return ParamsTextFormatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")


def configure_logger(
    logger_name: str = "toric_mu_p",
    level: int = logging.INFO,
    log_format: str = "text",
) -> None:
    """
    Configures the package logger for 'toric_mu_p'.

    Keeps a single stderr StreamHandler. A repeated call re-formats the
    existing handler instead of adding another one, so the last requested
    format and level win.

    Args:
        logger_name (str): The name of the logger to configure.
        level (int): The logging level. Defaults to logging.INFO.
        log_format (str): 'text' (params appended as JSON) or 'json'.
    """
    if log_format not in ["text", "json"]:
        raise ValueError("Invalid log_format. Supported formats are 'text' and 'json'.")

    pkg_logger = logging.getLogger(logger_name)

    handler = next(
        (h for h in pkg_logger.handlers if isinstance(h, logging.StreamHandler)), None
    )
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        pkg_logger.addHandler(handler)
    handler.setFormatter(_formatter(log_format))

    pkg_logger.setLevel(level)
    pkg_logger.propagate = True
