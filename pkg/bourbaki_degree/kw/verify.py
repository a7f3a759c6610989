"""Golden-corpus runner: analyze every catalog entry and diff against its expectation."""

from collections.abc import Sequence
from typing import Any

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.analysis.invariants import analyze
from bourbaki_degree.cli.pool import ordered_map
from bourbaki_degree.core.models import BourbakiReport, CatalogDiff, CatalogEntry, CatalogRow
from bourbaki_degree.kw.blocks import build
from bourbaki_degree.kw.catalog import catalog
from bourbaki_degree.observability.logging import get_logger
from bourbaki_degree.observability.metrics import CATALOG_MISMATCHES
from bourbaki_degree.observability.tracing import traced

logger = get_logger(__name__)

COMPARED = ("bour", "e", "e0", "e1", "shape", "betti")


def _betti_triples(rows: Sequence[Any] | None) -> list[list[int]] | None:
    if rows is None:
        return None
    return [[r.i, r.degree, r.rank] for r in rows]


def computed_invariants(report: BourbakiReport) -> dict[str, Any]:
    return {
        "bour": report.bour,
        "e": report.e,
        "e0": report.e0,
        "e1": report.e1,
        "shape": report.shape.value if report.shape else None,
        "betti": _betti_triples(report.betti_q),
    }


def expected_invariants(entry: CatalogEntry) -> dict[str, Any]:
    expected = entry.expected
    return {
        "bour": expected.bour,
        "e": expected.e,
        "e0": expected.e0,
        "e1": expected.e1,
        "shape": expected.shape.value,
        "betti": _betti_triples(expected.betti),
    }


def diff_lines(name: str, computed: dict[str, Any], expected: dict[str, Any]) -> list[str]:
    """One line per differing invariant; Betti tables only when an expectation exists."""
    lines = []
    for key in COMPARED:
        if key == "betti" and expected[key] is None:
            continue
        if computed[key] != expected[key]:
            lines.append(f"{name}: {key} expected {expected[key]} computed {computed[key]}")
    return lines


def verify_entry(entry: CatalogEntry, field: FieldSpec, extra_variables: int = 0) -> CatalogRow:
    theta = build(entry.spec, field, extra_variables=extra_variables)
    report = analyze(theta)
    computed = computed_invariants(report)
    expected = expected_invariants(entry)
    return CatalogRow(
        name=entry.spec.name,
        label=entry.spec.label,
        pattern=entry.spec.pattern,
        n=theta.n,
        computed=computed,
        expected=expected,
        matches=not diff_lines(entry.spec.name, computed, expected),
    )


@traced("kw.verify_catalog")
def verify_catalog(
    field: FieldSpec | str = "QQ",
    only: Sequence[str] | None = None,
    threads: int | None = None,
    entries: Sequence[CatalogEntry] | None = None,
) -> CatalogDiff:
    """Analyze the selected entries; an empty diff means every expectation held."""
    field = FieldSpec.parse(field)
    selected = list(entries if entries is not None else catalog())
    if only:
        wanted = set(only)
        unknown = wanted - {e.spec.name for e in selected}
        if unknown:
            raise KeyError(f"unknown catalog entries: {sorted(unknown)}")
        selected = [e for e in selected if e.spec.name in wanted]

    rows = ordered_map(lambda entry: verify_entry(entry, field), selected, threads)
    diff = [line for row in rows for line in diff_lines(row.name, row.computed, row.expected)]
    if diff:
        CATALOG_MISMATCHES.inc(len(diff))
        for line in diff:
            logger.warning("catalog_mismatch", line=line)
    logger.info("catalog_verified", field=field.label, entries=len(rows), mismatches=len(diff))
    return CatalogDiff(field=field.label, rows=rows, diff=diff)


def render_table(result: CatalogDiff) -> str:
    """Aligned text: name, blocks, n, then computed Bour/e/e0/e1/shape and a status mark."""
    header = ("name", "blocks", "n", "bour", "e", "e0", "e1", "shape", "ok")
    lines = [header]
    for row in result.rows:
        c = row.computed
        lines.append(
            (
                row.name,
                row.label,
                str(row.n),
                str(c["bour"]),
                str(c["e"]),
                str(c["e0"]),
                str(c["e1"]),
                str(c["shape"]),
                "yes" if row.matches else "NO",
            )
        )
    widths = [max(len(line[k]) for line in lines) for k in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(line, widths, strict=True)).rstrip()
        for line in lines
    )
