import functools
import inspect
import os
import sys
from collections.abc import Callable
from typing import Any, TypeVar

from loguru import logger as _logger

F = TypeVar("F", bound=Callable[..., Any])

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)


class CustomLogger:
    """Process-wide loguru configuration for the census tools."""

    _configured = False

    @classmethod
    def get_logger(cls) -> Any:
        """Return the shared loguru logger, configuring it on first use.

        The level is read from ``CENSUS_LOG_LEVEL`` (default ``INFO``). Records go to
        stderr so that tables printed on stdout stay machine readable.

        Returns:
            loguru.Logger: The configured logger.

        """
        if not cls._configured:
            cls.configure(os.getenv("CENSUS_LOG_LEVEL", "INFO"))
        return _logger

    @classmethod
    def configure(cls, level: str) -> None:
        """Replace the loguru sinks with a single stderr sink at ``level``.

        Args:
            level (str): Loguru level name, e.g. ``DEBUG``.

        """
        _logger.remove()
        _logger.add(sys.stderr, level=level.upper(), format=LOG_FORMAT)
        cls._configured = True


def loggable(func: F) -> F:
    """Log entry and exit of ``func`` at DEBUG level.

    Works for plain and ``async`` functions alike.

    Args:
        func (Callable): Function to wrap.

    Returns:
        Callable: The wrapped function.

    """
    logger = CustomLogger.get_logger()
    name = func.__qualname__

    if inspect.iscoroutinefunction(func):

        @functools.wraps(func)
        async def async_wrapper(*args: Any, **kwargs: Any) -> Any:
            logger.debug(f"Calling {name}")
            result = await func(*args, **kwargs)
            logger.debug(f"Finished {name}")
            return result

        return async_wrapper  # type: ignore[return-value]

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        logger.debug(f"Calling {name}")
        result = func(*args, **kwargs)
        logger.debug(f"Finished {name}")
        return result

    return wrapper  # type: ignore[return-value]
