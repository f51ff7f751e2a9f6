import functools
import logging
from collections.abc import Callable
from typing import ParamSpec, TypeVar

from toric_mu_p.common.exceptions import ToricQuotientError

logger = logging.getLogger(__name__)

T = TypeVar("T")
P = ParamSpec("P")


def pipeline_stage(
    name: str,
    log_level: int = logging.ERROR,
) -> Callable[[Callable[P, T]], Callable[P, T]]:
    """
    Decorator labelling errors raised inside a pipeline stage.

    Any ToricQuotientError escaping the wrapped function is tagged with the
    stage name (unless an inner stage already tagged it), logged once and
    re-raised.

    Args:
        name: Stage label, e.g. "is_mu_p" or "diagonalize".
        log_level: Logging level used when an error passes through.

    Returns:
        Decorated function with labelled errors.
    """

    def decorator(func: Callable[P, T]) -> Callable[P, T]:
        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except ToricQuotientError as e:
                if e.stage is None:
                    e.stage = name
                    logger.log(log_level, "Stage %s failed: %s", name, e)
                raise

        return wrapper

    return decorator
