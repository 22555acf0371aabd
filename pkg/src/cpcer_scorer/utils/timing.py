"""Timing helpers for function-level performance analysis."""

import functools
import logging
import time
from typing import Any, Callable, Optional, TypeVar

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def timing_decorator(func_name: Optional[str] = None) -> Callable[[F], F]:
    """Decorator to log execution time at DEBUG level."""
    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            name = func_name or func.__name__
            if not logger.isEnabledFor(logging.DEBUG):
                return func(*args, **kwargs)
            start_time = time.perf_counter()
            logger.debug(f"[TIMING] Function '{name}' starting...")
            try:
                result = func(*args, **kwargs)
            except Exception:
                execution_time = time.perf_counter() - start_time
                logger.debug(f"[TIMING] Function '{name}' failed after: {execution_time:.3f}s")
                raise
            execution_time = time.perf_counter() - start_time
            logger.debug(f"[TIMING] Function '{name}' completed: {execution_time:.3f}s")
            return result
        return wrapper  # type: ignore[return-value]
    return decorator
