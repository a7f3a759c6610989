"""Observability - Structured Logging."""

import logging
import sys

import structlog
from structlog.types import Processor

from bourbaki_degree.core.config import get_settings


def setup_logging(level: str | None = None) -> None:
    """Configure structured logging with structlog.

    Logs go to stderr; stdout is reserved for reports.

    Args:
        level: Optional override of the configured log level; ``BOURBAKI_DEBUG``
            otherwise forces DEBUG.
    """
    settings = get_settings()
    level_name = (level or ("DEBUG" if settings.debug else settings.log_level)).upper()

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level_name),
        force=True,
    )

    shared_processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.UnicodeDecoder(),
    ]

    if settings.is_production:
        shared_processors.append(structlog.processors.format_exc_info)
        shared_processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        shared_processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=shared_processors,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    """Get a configured logger.

    Args:
        name: Logger name.

    Returns:
        Configured structlog logger.
    """
    return structlog.get_logger(name)


def bind_run_context(seed: int | None = None, field: str | None = None) -> None:
    """Attach run provenance to every subsequent log line.

    Args:
        seed: Seed of the randomized suites, if any.
        field: Coefficient field label.
    """
    structlog.contextvars.bind_contextvars(seed=seed, field=field)


def clear_run_context() -> None:
    """Remove run provenance from logs."""
    structlog.contextvars.unbind_contextvars("seed", "field")
