"""Brute-force dimensions against Groebner-side Hilbert series."""

import pytest

from bourbaki_degree.analysis.invariants import run_analysis
from bourbaki_degree.groebner.ideals import as_elements
from bourbaki_degree.kw.blocks import build
from bourbaki_degree.kw.catalog import find
from bourbaki_degree.oracle.dense import (
    graded_kernel_dim,
    graded_piece,
    monomials_of_degree,
    oracle_table,
    quotient_dim_bruteforce,
)


def test_monomials_of_degree():
    assert len(monomials_of_degree(3, 2)) == 6
    assert len(monomials_of_degree(4, 3)) == 20
    assert monomials_of_degree(3, -1) == ()
    assert monomials_of_degree(3, 0) == ((0, 0, 0),)


def test_graded_piece_respects_shifts():
    # R(1) + R in degree 0: one constant and three linear forms
    assert len(graded_piece(3, (-1, 0), 0)) == 4


def test_quotient_dimension(ring3):
    x1, _, _ = ring3.gens
    # k[x1, x2, x3]/(x1) in degree 3 is spanned by the cubics in x2, x3
    assert quotient_dim_bruteforce((0,), as_elements([x1]), 3, ring3) == 4


def test_no_syzygies_of_d2b1_below_degree_two(d2b1):
    gmap = d2b1.graded_map()
    assert graded_kernel_dim(gmap, 0) == 0
    assert graded_kernel_dim(gmap, 1) == 0
    assert graded_kernel_dim(gmap, 2) > 0


def test_kernel_dimension_jumps_at_initial_degree(d2b1):
    analysis = run_analysis(d2b1, resolution=False)
    e = analysis.report.e
    assert graded_kernel_dim(d2b1.graded_map(), e - 1) == 0
    assert graded_kernel_dim(d2b1.graded_map(), e) > 0


def test_oracle_agrees_on_d2b1(d2b1):
    analysis = run_analysis(d2b1, resolution=False)
    rows = oracle_table(d2b1.graded_map(), analysis.series_syz, analysis.series_q, 5)
    assert rows[0].degree == -1
    assert all(row.agree for row in rows)


@pytest.mark.parametrize("name", ["D3", "D1J2", "D2J1", "D1J1J1-equal"])
def test_oracle_agrees_on_catalog_entries(name):
    theta = build(find(name).spec)
    analysis = run_analysis(theta, resolution=False)
    rows = oracle_table(theta.graded_map(), analysis.series_syz, analysis.series_q, 4)
    assert all(row.agree for row in rows)


def test_oracle_agrees_over_prime_field(fp):
    theta = build(find("D2B1").spec, fp)
    analysis = run_analysis(theta, resolution=False)
    rows = oracle_table(theta.graded_map(), analysis.series_syz, analysis.series_q, 4)
    assert all(row.agree for row in rows)
