"""Validation of Theta, its invariants and the Bourbaki degree."""

import random

import pytest

from bourbaki_degree.algebra.grammar import parse_poly
from bourbaki_degree.analysis.equigenerated import equigenerated, ideal_theta, value_classes
from bourbaki_degree.analysis.geometry import (
    distribution_check,
    euler_forms,
    jacobian_distribution,
    jacobian_theta,
)
from bourbaki_degree.analysis.invariants import (
    analyze,
    bourbaki_degree_direct,
    bourbaki_formula,
    check_bounds,
    choose_generator,
    psi_syzygies,
    run_analysis,
)
from bourbaki_degree.analysis.rowwise import emax_check, row_formula, row_wise
from bourbaki_degree.analysis.sampling import random_pencil_jacobian, random_quadric_triple, random_theta
from bourbaki_degree.analysis.theta import validate
from bourbaki_degree.core.errors import ThetaValidationError, UnsupportedCase, UsageError
from bourbaki_degree.core.models import ShapeTag, ValueClass
from bourbaki_degree.resolution.betti import BettiTable
from bourbaki_degree.resolution.shapes import buchsbaum_rim_table

from tests.conftest import QUADRICS

NODAL_JACOBIAN = ("5*x1^4 + x2*x3^3", "x1*x3^3 + 5*x2^4", "3*x1*x2*x3^2")
DEGENERATE_ROWS = [["x3", "x4", "0", "0"], ["x1*x3", "x1*x4", "-x1*x2", "-x2^2"]]

# ============================================================================
# Validation
# ============================================================================


def test_validate_d2b1(d2b1):
    assert (d2b1.d1, d2b1.d2, d2b1.d) == (1, 1, 2)
    assert not d2b1.swapped
    assert len(d2b1.minors()) == 6


def test_validate_orders_rows_by_degree(qq):
    theta = validate([["x1^2", "x2^2", "x3^2", "0"], ["x1", "x2", "x3", "0"]], 3, qq)
    assert theta.swapped
    assert (theta.d1, theta.d2) == (1, 2)
    assert theta.rendered()[0] == ["x1", "x2", "x3", "0"]


def test_rank_one_rejected(qq):
    with pytest.raises(ThetaValidationError) as info:
        validate([["x1", "x2", "0", "x3"], ["2*x1", "2*x2", "0", "2*x3"]], 4, qq)
    assert info.value.violations == ["rank"]


def test_common_factor_rejected(qq):
    with pytest.raises(ThetaValidationError) as info:
        validate([["x1^2", "x1*x2", "x1*x3", "x1*x4"], ["x4", "x3", "x2", "x1"]], 4, qq)
    assert "row_height" in info.value.violations
    assert "row_height_f" in info.value.details


def test_inhomogeneous_and_zero_rows(qq):
    with pytest.raises(ThetaValidationError) as info:
        validate([["x1", "x2^2", "0", "0"], ["0", "0", "0", "0"]], 4, qq)
    assert info.value.violations == ["inhomogeneous_row", "zero_row"]


def test_wrong_shape(qq):
    with pytest.raises(UsageError):
        validate([["x1", "x2", "x3"], ["x2", "x3", "x1"]], 3, qq)


# ============================================================================
# Bourbaki degree
# ============================================================================


def test_formula_arithmetic():
    # (1 - 2)(1 + 1) + 3 + 1 - 1
    assert bourbaki_formula(1, 1, 1, 1, -1) == 1
    assert bourbaki_formula(1, 1, 2, 0, 0) == 3


def test_bounds():
    bounds = check_bounds(1, 1, 2, 0, 0, 3)
    assert bounds.upper == 3
    assert bounds.all_ok
    assert not check_bounds(1, 1, 1, 0, 2, 6).upper_ok
    assert not check_bounds(1, 1, 3, 0, 0, None).e_in_range


def test_d2b1_report(d2b1):
    report = analyze(d2b1)
    assert (report.e, report.e0, report.e1, report.e1_raw) == (2, 0, 1, -1)
    assert report.bour == report.bour_formula == report.bour_direct == 2
    assert report.s == 0
    assert report.shape == ShapeTag.OTHER
    assert report.hilbert_polynomial_q == "t + 3"
    expected = BettiTable.from_shifts([(-1, -1), (0,) * 4, (2,) * 5, (3,) * 4, (4,)])
    assert BettiTable.from_models(report.betti_q) == expected
    assert report.pd_q == 4
    assert report.depth_q == 0
    assert report.bounds_ok
    assert not report.flags.free


def test_d2b1_direct_route(d2b1):
    analysis = run_analysis(d2b1, resolution=False)
    nu = choose_generator(analysis.syz_gb, 2)
    assert bourbaki_degree_direct(d2b1, nu) == 2
    assert analysis.report.bourbaki_ideal.shift == analysis.report.s


def test_psi_columns_are_syzygies(d2b1):
    gmap = d2b1.graded_map()
    assert all(gmap.apply(v).is_zero() for v in psi_syzygies(d2b1))


def test_results_do_not_depend_on_field(qq, fp):
    theta_qq = validate([["x1", "x2", "0", "x3"], ["0", "x1", "x2", "x4"]], 4, qq)
    theta_fp = validate([["x1", "x2", "0", "x3"], ["0", "x1", "x2", "x4"]], 4, fp)
    a, b = analyze(theta_qq), analyze(theta_fp)
    assert (a.e, a.e0, a.e1, a.bour, a.betti_q) == (b.e, b.e0, b.e1, b.bour, b.betti_q)


def test_compressible_matrix(qq):
    theta = validate([["x1", "x2", "x3", "0"], ["x2", "x3", "x1", "0"]], 3, qq)
    analysis = run_analysis(theta)
    report = analysis.report
    assert report.e == 0
    assert report.flags.compressible
    assert report.bour is None
    assert report.s == report.e0 - report.d
    with pytest.raises(UnsupportedCase):
        bourbaki_degree_direct(theta, choose_generator(analysis.syz_gb, 0))


def test_free_matrix_has_bourbaki_degree_zero(qq):
    theta = validate(DEGENERATE_ROWS, 4, qq)
    report = analyze(theta)
    assert report.bour == 0
    assert report.flags.free
    assert report.bourbaki_ideal.free
    assert BettiTable.from_models(report.betti_syz).degrees(0) == [1, 1]


@pytest.mark.slow
def test_generic_linear_matrix(generic_linear):
    report = analyze(generic_linear)
    assert report.series_q_twisted.numerator == [[0, 2], [1, 2]]
    assert report.series_q_twisted.pole == 5
    assert (report.e, report.e0, report.e1) == (2, 0, 0)
    assert report.bour == report.q == 3
    assert report.shape == ShapeTag.BUCHSBAUM_RIM
    assert BettiTable.from_models(report.betti_q) == buchsbaum_rim_table(1, 1)
    assert report.dim_q == 5


def test_random_matrices_satisfy_the_identities():
    rng = random.Random("analysis-random")
    for _ in range(5):
        theta = random_theta(rng, rng.randint(3, 4), 2)
        report = run_analysis(theta).report
        assert report.bounds_ok
        if report.bour is not None:
            assert report.bour_formula == report.bour_direct
            assert (report.bour == 0) == report.flags.free


# ============================================================================
# Equigenerated ideals
# ============================================================================


def test_ideal_theta_shape(qq):
    theta = ideal_theta(*QUADRICS, n=4, field=qq)
    assert (theta.d1, theta.d2) == (0, 2)
    assert theta.rendered()[0] == ["0", "0", "0", "1"]


def test_ideal_theta_rejections(qq):
    with pytest.raises(ThetaValidationError) as info:
        ideal_theta("x1", "x2^2", "x3^2", n=3, field=qq)
    assert info.value.violations == ["unequal_degrees"]
    with pytest.raises(ThetaValidationError) as info:
        ideal_theta("x1^2", "x1*x2", "x1*x3", n=3, field=qq)
    assert info.value.violations == ["ideal_height"]


def test_quadrics_with_bourbaki_degree_two():
    result = equigenerated(*QUADRICS, n=4)
    assert (result.bour, result.deg_rj, result.e) == (2, 2, 2)
    assert result.report.e1 == 2
    assert result.identity_ok
    assert result.bound_ok
    assert ValueClass.TWO in result.value_classes


def test_quadrics_stable_under_extra_variable():
    four = equigenerated(*QUADRICS, n=4)
    five = equigenerated(*QUADRICS, n=5)
    assert (four.bour, four.deg_rj, four.e, four.report.e0, four.report.e1) == (
        five.bour,
        five.deg_rj,
        five.e,
        five.report.e0,
        five.report.e1,
    )


def test_complete_intersection():
    result = equigenerated("x1^2", "x2^2", "x3^2", n=3)
    assert result.complete_intersection
    assert result.bour == 4
    assert result.value_classes == [ValueClass.COMPLETE_INTERSECTION]
    assert result.identity_ok


@pytest.mark.slow
def test_nodal_plane_curve():
    result = equigenerated(*NODAL_JACOBIAN, n=3)
    assert (result.e, result.bour, result.tau) == (4, 15, 1)
    assert ValueClass.D_SQUARED_MINUS_ONE in result.value_classes
    expected = BettiTable.from_shifts([(0,), (4, 4, 4), (8, 8, 8, 10), (11, 11)])
    assert BettiTable.from_models(result.betti_rj) == expected
    assert result.identity_ok


def test_value_classes():
    assert value_classes(None, 3) == []
    assert value_classes(3, 2) == [ValueClass.D_SQUARED_MINUS_ONE]
    assert value_classes(0, 1) == [ValueClass.PERFECT, ValueClass.D_SQUARED_MINUS_ONE]
    assert value_classes(9, 3) == [ValueClass.COMPLETE_INTERSECTION]


def test_random_quadric_triples_avoid_two():
    rng = random.Random("quadric-triples")
    for _ in range(3):
        theta = random_quadric_triple(rng, 3)
        assert (theta.d1, theta.d2) == (0, 2)
        result = equigenerated(*theta.g[:3], n=3)
        assert result.bour != 2


# ============================================================================
# Rows
# ============================================================================


def test_row_wise_d2b1(d2b1):
    report = row_wise(d2b1)
    assert (report.e_f, report.e_g) == (0, 0)
    assert (report.deg_rtheta_f, report.deg_rtheta_g) == (0, 0)
    assert report.stated_f.uses_degree == 1
    assert report.stated_f.value == 1


def test_row_formula():
    assert row_formula(0, -1, 1, 0) == 1
    assert row_formula(2, 0, 1, 1) == -2


def test_emax_condition_fails_for_d2b1(d2b1):
    record = emax_check(d2b1)
    assert (record.t, record.degree, record.e) == (0, 2, 2)
    assert record.dim_intersection == record.dim_product
    assert not record.condition_holds
    assert record.implication_ok


# ============================================================================
# Geometry
# ============================================================================


def test_distribution_of_d2b1(d2b1, qq):
    h1, h2 = euler_forms(d2b1)
    assert h1 == parse_poly("x1^2 + x2^2 + x3*x4", 4, qq)
    assert h2 == parse_poly("x1*x2 + x2*x3 + x4^2", 4, qq)
    record = distribution_check(d2b1, analyze(d2b1))
    assert record.regular_sequence
    assert record.dim == 2


def test_distribution_fails_for_degenerate_matrix(qq):
    theta = validate(DEGENERATE_ROWS, 4, qq)
    assert not distribution_check(theta).regular_sequence


def test_distribution_needs_four_variables(generic_linear):
    with pytest.raises(UsageError):
        distribution_check(generic_linear)


def test_jacobian_of_quadric_pencil():
    f, g = "x1^2 + x2^2 + x3*x4", "x1*x2 + x2*x3 + x4^2"
    theta = jacobian_theta(f, g)
    assert (theta.d1, theta.d2) == (1, 1)
    assert theta.rendered()[0] == ["2*x1", "2*x2", "x4", "x3"]
    assert jacobian_distribution(f, g, theta).regular_sequence


def test_jacobian_of_equal_forms_rejected():
    with pytest.raises(ThetaValidationError) as info:
        jacobian_theta("x1^2 + x2*x3", "x1^2 + x2*x3")
    assert "rank" in info.value.violations


def test_jacobian_of_constant_rejected():
    with pytest.raises(UsageError):
        jacobian_theta("1", "x1*x2")


def test_random_pencils():
    rng = random.Random("pencils")
    for _ in range(3):
        f, g, theta = random_pencil_jacobian(rng)
        report = run_analysis(theta, mode="jacobian").report
        value = 0 if report.flags.compressible else report.bour
        assert value in {0, 1, 3}
        jacobian_distribution(f, g, theta)


def test_sampling_is_reproducible():
    a = random_theta(random.Random(7), 4)
    b = random_theta(random.Random(7), 4)
    assert a.rendered() == b.rendered()
