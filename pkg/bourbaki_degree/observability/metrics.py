"""Observability - Prometheus Metrics."""

from prometheus_client import REGISTRY, Counter, Histogram, start_http_server, write_to_textfile

from bourbaki_degree.core.config import get_settings


# ============================================================================
# Groebner Engine Metrics
# ============================================================================

SPAIRS_TOTAL = Counter(
    "bourbaki_spairs_total",
    "S-pairs taken from the pair queue",
)

ZERO_REDUCTIONS_TOTAL = Counter(
    "bourbaki_zero_reductions_total",
    "S-pairs or generators reducing to zero (each yields a syzygy)",
)

GROEBNER_BASIS_SIZE = Histogram(
    "bourbaki_groebner_basis_size",
    "Number of elements in completed Groebner bases",
    buckets=[1, 2, 4, 8, 16, 32, 64, 128, 256],
)


# ============================================================================
# Analysis Metrics
# ============================================================================

ANALYSIS_LATENCY = Histogram(
    "bourbaki_analysis_latency_seconds",
    "Wall time of one analysis",
    ["mode"],
    buckets=[0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 30.0, 120.0],
)

RESOLUTION_LENGTH = Histogram(
    "bourbaki_resolution_length",
    "Projective dimension of resolved cokernels",
    buckets=[0, 1, 2, 3, 4, 5, 6, 8],
)

CATALOG_MISMATCHES = Counter(
    "bourbaki_catalog_mismatches_total",
    "Catalog entries whose computed invariants differ from the expected ones",
)

SELFTEST_FAILURES = Counter(
    "bourbaki_selftest_failures_total",
    "Property violations found by the self-test",
    ["suite"],
)


# ============================================================================
# Setup
# ============================================================================


def setup_metrics() -> None:
    """Serve the registry over HTTP when a metrics port is configured."""
    settings = get_settings()
    if settings.metrics_port is not None:
        start_http_server(settings.metrics_port)


def flush_metrics() -> None:
    """Write the registry to the configured textfile, if any."""
    settings = get_settings()
    if settings.metrics_textfile:
        write_to_textfile(settings.metrics_textfile, REGISTRY)


def record_analysis_metrics(
    mode: str,
    elapsed: float,
    projective_dimension: int | None,
) -> None:
    """Record metrics for one analysis.

    Args:
        mode: Input mode (matrix, ideal, jacobian, catalog).
        elapsed: Wall time in seconds.
        projective_dimension: pd of the cokernel, when a resolution was computed.
    """
    ANALYSIS_LATENCY.labels(mode=mode).observe(elapsed)
    if projective_dimension is not None:
        RESOLUTION_LENGTH.observe(projective_dimension)
