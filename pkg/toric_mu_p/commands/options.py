import logging
import sys
from collections.abc import Callable
from typing import NoReturn

import click

from toric_mu_p.common.exceptions import ToricQuotientError

logger = logging.getLogger(__name__)


def add_options(options: list[Callable]) -> Callable:
    """Decorator to add a list of click options."""

    def _add_options(func: Callable) -> Callable:
        for option in reversed(options):
            func = option(func)
        return func

    return _add_options


def fail(error: ToricQuotientError) -> NoReturn:
    """Reports an error on stderr and exits with its category's code."""
    logger.debug("Exiting with code %d", error.exit_code, exc_info=error)
    click.echo(f"Error: {error}", err=True)
    sys.exit(error.exit_code)


def parse_int_list(value: str) -> tuple[int, ...]:
    """'1,-2, 3' -> (1, -2, 3)."""
    try:
        return tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError as e:
        raise click.BadParameter(f"Expected comma-separated integers, got '{value}'.") from e
