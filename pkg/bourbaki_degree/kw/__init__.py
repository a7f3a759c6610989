"""Kronecker-Weierstrass Package: normal-form matrices and the golden corpus."""

from bourbaki_degree.kw.blocks import build, check_pattern, variables_needed
from bourbaki_degree.kw.catalog import B, D, J, catalog, find
from bourbaki_degree.kw.verify import (
    computed_invariants,
    diff_lines,
    expected_invariants,
    render_table,
    verify_catalog,
    verify_entry,
)

__all__ = [
    "B",
    "D",
    "J",
    "build",
    "catalog",
    "check_pattern",
    "computed_invariants",
    "diff_lines",
    "expected_invariants",
    "find",
    "render_table",
    "variables_needed",
    "verify_catalog",
    "verify_entry",
]
