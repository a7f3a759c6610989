"""Observability Package Exports."""

from bourbaki_degree.observability.logging import (
    bind_run_context,
    clear_run_context,
    get_logger,
    setup_logging,
)
from bourbaki_degree.observability.metrics import (
    ANALYSIS_LATENCY,
    CATALOG_MISMATCHES,
    GROEBNER_BASIS_SIZE,
    RESOLUTION_LENGTH,
    SELFTEST_FAILURES,
    SPAIRS_TOTAL,
    ZERO_REDUCTIONS_TOTAL,
    flush_metrics,
    record_analysis_metrics,
    setup_metrics,
)
from bourbaki_degree.observability.tracing import get_tracer, traced

__all__ = [
    # Logging
    "setup_logging",
    "get_logger",
    "bind_run_context",
    "clear_run_context",
    # Metrics
    "setup_metrics",
    "flush_metrics",
    "record_analysis_metrics",
    "SPAIRS_TOTAL",
    "ZERO_REDUCTIONS_TOTAL",
    "GROEBNER_BASIS_SIZE",
    "ANALYSIS_LATENCY",
    "RESOLUTION_LENGTH",
    "CATALOG_MISMATCHES",
    "SELFTEST_FAILURES",
    # Tracing
    "get_tracer",
    "traced",
]
