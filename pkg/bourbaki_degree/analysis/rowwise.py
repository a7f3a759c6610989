"""Syz(Theta) against the syzygies of each row separately."""

from bourbaki_degree.analysis.invariants import Analysis, run_analysis
from bourbaki_degree.analysis.theta import ThetaMatrix
from bourbaki_degree.core.models import EmaxRecord, RowReport, RowVariant
from bourbaki_degree.groebner.buchberger import buchberger, kernel
from bourbaki_degree.groebner.ideals import as_elements, ideal_product, intersect_ideals
from bourbaki_degree.hilbert.monomial import hilbert_of_submodule, initial_degree, quotient_ring_series
from bourbaki_degree.hilbert.series import HilbertSeries, degree_at, rank_one_quotient
from bourbaki_degree.observability.logging import get_logger
from bourbaki_degree.oracle.dense import hilbert_function_bruteforce

logger = get_logger(__name__)

SOURCE = (0, 0, 0, 0)


def _row_syzygies(theta: ThetaMatrix, index: int) -> tuple[int, HilbertSeries]:
    """Initial degree and series of the syzygies of one row."""
    gb = buchberger(kernel(theta.row_map(index)), ring=theta.ring, shifts=SOURCE)
    return initial_degree(gb), hilbert_of_submodule(SOURCE, gb)


def row_formula(e0: int, e1_raw: int, row_degree: int, deg_row_ideal: int) -> int:
    """deg(R/I_row) predicted from e0, e1 and the row ideal multiplicity."""
    return (e0 * e0 - (2 * row_degree + 1) * e0) // 2 - e1_raw - deg_row_ideal


def row_wise(theta: ThetaMatrix, analysis: Analysis | None = None) -> RowReport:
    """Row syzygy modules, the rank-one quotients Syz(Theta_row)/Syz(Theta) and both formula variants."""
    analysis = analysis or run_analysis(theta, resolution=False)
    e0, e1_raw = analysis.coefficients.e0, analysis.coefficients.e1_raw
    n = theta.n

    initial: list[int] = []
    shifts: list[int] = []
    deg_ri: list[int] = []
    deg_rtheta: list[int] = []
    for index in (0, 1):
        e_row, series_row = _row_syzygies(theta, index)
        quotient = rank_one_quotient(series_row - analysis.series_syz)
        initial.append(e_row)
        shifts.append(quotient.sigma)
        deg_ri.append(quotient.degree)
        deg_rtheta.append(degree_at(quotient_ring_series(list(theta.rows[index])), n - 2))

    def variant(index: int, row_degree: int) -> RowVariant:
        value = row_formula(e0, e1_raw, row_degree, deg_rtheta[index])
        return RowVariant(uses_degree=row_degree, value=value, matches=value == deg_ri[index])

    report = RowReport(
        e_f=initial[0],
        e_g=initial[1],
        shift_f=shifts[0],
        shift_g=shifts[1],
        deg_ri_f=deg_ri[0],
        deg_ri_g=deg_ri[1],
        deg_rtheta_f=deg_rtheta[0],
        deg_rtheta_g=deg_rtheta[1],
        stated_f=variant(0, theta.d1),
        stated_g=variant(1, theta.d2),
        derived_f=variant(0, theta.d2),
        derived_g=variant(1, theta.d1),
    )
    logger.info(
        "row_wise",
        e_f=report.e_f,
        e_g=report.e_g,
        deg_ri=deg_ri,
        stated=[report.stated_f.matches, report.stated_g.matches],
        derived=[report.derived_f.matches, report.derived_g.matches],
    )
    return report


def emax_check(theta: ThetaMatrix, analysis: Analysis | None = None) -> EmaxRecord:
    """Compare (J_f meet J_g) with J_f J_g in degree t + d, t = max(e_f, e_g).

    When the intersection is strictly larger there, e must equal t.
    """
    analysis = analysis or run_analysis(theta, resolution=False)
    e_f, _ = _row_syzygies(theta, 0)
    e_g, _ = _row_syzygies(theta, 1)
    t = max(e_f, e_g)
    degree = t + theta.d
    ring = theta.ring

    meet = intersect_ideals(theta.f, theta.g)
    product = ideal_product(theta.f, theta.g)
    dim_meet = hilbert_function_bruteforce((0,), as_elements(meet), degree, ring)
    dim_product = hilbert_function_bruteforce((0,), as_elements(product), degree, ring)
    condition = dim_meet > dim_product
    e = analysis.report.e
    record = EmaxRecord(
        t=t,
        degree=degree,
        dim_intersection=dim_meet,
        dim_product=dim_product,
        condition_holds=condition,
        e=e,
        implication_ok=not condition or e == t,
    )
    if not record.implication_ok:
        logger.warning("emax_implication_failed", t=t, e=e, degree=degree)
    return record
