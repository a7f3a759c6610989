"""Kronecker-Weierstrass blocks, the catalog and its verification."""

import pytest
from pydantic import ValidationError

from bourbaki_degree.algebra.grammar import parse_poly
from bourbaki_degree.core.errors import UsageError
from bourbaki_degree.core.models import BlockKind, BlockSpec, KWSpec, ShapeTag
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

from tests.conftest import D2B1_ROWS


def _spec(*blocks, pattern=""):
    return KWSpec(name="test", blocks=blocks, pattern=pattern)


# ============================================================================
# Blocks
# ============================================================================


def test_build_d2b1(qq):
    theta = build(find("D2B1").spec)
    assert theta.n == 4
    expected = [[parse_poly(p, 4, qq) for p in row] for row in D2B1_ROWS]
    assert [list(row) for row in theta.rows] == expected


def test_build_jordan_blocks(qq):
    theta = build(_spec(J(2, 2), J(2, 3), pattern="l,m"))
    assert theta.rendered() == [
        ["x1", "x2", "x3", "x4"],
        ["2*x1", "x1 + 2*x2", "3*x3", "x3 + 3*x4"],
    ]


def test_scroll_variable_order():
    theta = build(find("B4").spec)
    assert theta.n == 5
    assert theta.rendered() == [
        ["x1", "x2", "x3", "x4"],
        ["x5", "x1", "x2", "x3"],
    ]


def test_extra_variables():
    theta = build(find("D2B1").spec, extra_variables=2)
    assert theta.n == 6


def test_variables_needed():
    assert variables_needed(_spec(B(4))) == 5
    assert variables_needed(_spec(D(3))) == 3
    assert variables_needed(_spec(D(1), J(1, 2), J(1, 3))) == 3


def test_column_count_checked():
    with pytest.raises(UsageError, match="columns"):
        build(_spec(D(2), D(1)))


def test_jordan_block_needs_parameter():
    with pytest.raises(ValidationError):
        BlockSpec(kind=BlockKind.JORDAN, size=2)
    with pytest.raises(ValidationError):
        BlockSpec(kind=BlockKind.SCROLL, size=2, parameter=1)


@pytest.mark.parametrize(
    ("blocks", "pattern"),
    [
        ((J(1, 2), J(1, 2), D(1)), "l,m"),
        ((J(1, 2), J(1, 3), D(1)), "l,l"),
        ((J(2, 2), J(2, 3)), "0,m"),
        ((J(2, 2), J(2, 3)), "l"),
    ],
)
def test_pattern_violations(blocks, pattern):
    with pytest.raises(UsageError):
        check_pattern(_spec(*blocks, pattern=pattern))


def test_pattern_accepts_zero():
    check_pattern(_spec(B(2), J(1, 0), J(1, 0), pattern="0,0"))


# ============================================================================
# Catalog
# ============================================================================


def test_catalog_size_and_names():
    entries = catalog()
    names = [e.spec.name for e in entries]
    assert len(entries) == 36
    assert len(set(names)) == len(names)
    assert all(e.spec.columns == 4 for e in entries)


def test_catalog_expectations_by_family():
    by_source = {}
    for entry in catalog():
        by_source.setdefault(entry.expected.source, []).append(entry)
    assert len(by_source["buchsbaum-rim"]) == 18
    assert len(by_source["free"]) == 8
    assert len(by_source["nearly-free-codim-2"]) == 6
    assert len(by_source["nearly-free-codim-1"]) == 3
    assert [e.spec.name for e in by_source["bour-2"]] == ["D2B1"]


def test_catalog_follows_configured_parameters(monkeypatch):
    from bourbaki_degree.core.config import get_settings

    monkeypatch.setenv("BOURBAKI_KW_LAMBDA", "7")
    get_settings.cache_clear()
    catalog.cache_clear()
    assert find("J4").spec.blocks[0].parameter == 7


def test_every_pattern_is_consistent():
    for entry in catalog():
        check_pattern(entry.spec)


def test_find_unknown():
    with pytest.raises(KeyError):
        find("D9")


# ============================================================================
# Verification
# ============================================================================


def test_verify_d2b1(qq):
    row = verify_entry(find("D2B1"), qq)
    assert row.matches
    assert row.computed["bour"] == 2
    assert row.computed["shape"] == ShapeTag.OTHER.value


def test_diff_reports_one_line_per_invariant():
    entry = find("D2B1")
    expected = expected_invariants(entry)
    computed = dict(expected, bour=3)
    assert diff_lines("D2B1", computed, expected) == ["D2B1: bour expected 2 computed 3"]


def test_diff_skips_missing_betti():
    entry = find("D3")
    expected = dict(expected_invariants(entry), betti=None)
    computed = dict(expected, betti=[[0, -1, 2]])
    assert diff_lines("D3", computed, expected) == []


def test_computed_invariants_keys(d2b1):
    from bourbaki_degree.analysis.invariants import analyze

    assert set(computed_invariants(analyze(d2b1))) == {"bour", "e", "e0", "e1", "shape", "betti"}


def test_perturbed_expectation_fails():
    entry = find("D2B1")
    broken = entry.model_copy(update={"expected": entry.expected.model_copy(update={"e1": 5})})
    result = verify_catalog(entries=[broken])
    assert not result.passed
    assert result.diff == ["D2B1: e1 expected 5 computed 1"]


def test_verify_selection_keeps_order():
    result = verify_catalog(only=["D2B1", "D1J1J1-equal", "D3"], threads=2)
    assert result.passed
    assert [r.name for r in result.rows] == ["D3", "D1J1J1-equal", "D2B1"]
    table = render_table(result)
    assert table.splitlines()[0].split()[:3] == ["name", "blocks", "n"]
    assert len(table.splitlines()) == 4


def test_verify_unknown_name():
    with pytest.raises(KeyError):
        verify_catalog(only=["nope"])


@pytest.mark.slow
@pytest.mark.parametrize("field", ["QQ", "Fp:32003"])
def test_full_catalog(field):
    result = verify_catalog(field)
    assert result.diff == []
    assert len(result.rows) == 36


@pytest.mark.slow
def test_catalog_with_extra_variable(qq):
    for name in ("D3", "D1J2", "D2J1", "D2B1"):
        assert verify_entry(find(name), qq, extra_variables=1).matches
