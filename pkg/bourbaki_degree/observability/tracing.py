"""Observability - OpenTelemetry Tracing."""

import functools
from collections.abc import Callable
from typing import ParamSpec, TypeVar

from opentelemetry import trace

P = ParamSpec("P")
R = TypeVar("R")


def get_tracer(name: str) -> trace.Tracer:
    """Get a tracer instance.

    Spans are no-ops unless the host process installs a tracer provider.

    Args:
        name: Tracer name (usually module name).

    Returns:
        OpenTelemetry tracer.
    """
    return trace.get_tracer(name)


def traced(name: str | None = None) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Decorator to trace a function.

    Args:
        name: Optional span name (defaults to function name).

    Returns:
        Decorated function.
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        span_name = name or func.__qualname__

        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            tracer = get_tracer(func.__module__)
            with tracer.start_as_current_span(span_name) as span:
                try:
                    return func(*args, **kwargs)
                except Exception as e:
                    span.record_exception(e)
                    raise

        return wrapper

    return decorator
