"""Equigenerated ideals J = (f1, f2, f3) seen through Theta_J = [[0,0,0,1],[f1,f2,f3,0]]."""

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.algebra.polynomials import degree, is_homogeneous
from bourbaki_degree.analysis.invariants import Analysis, run_analysis
from bourbaki_degree.analysis.theta import Entry, ThetaMatrix, coerce_entries, validate
from bourbaki_degree.core.errors import ThetaValidationError
from bourbaki_degree.core.models import EquigeneratedReport, ValueClass
from bourbaki_degree.hilbert.monomial import ideal_height
from bourbaki_degree.hilbert.series import degree_at, hilbert_polynomial, krull_dimension
from bourbaki_degree.observability.logging import get_logger

logger = get_logger(__name__)


def ideal_theta(
    f1: Entry, f2: Entry, f3: Entry, n: int, field: FieldSpec | str = "QQ"
) -> ThetaMatrix:
    """The matrix attached to J; rejects unequal degrees and height <= 1."""
    field = FieldSpec.parse(field)
    (gens,) = coerce_entries([[f1, f2, f3]], n, field)
    nonzero = [p for p in gens if p]
    degrees = {degree(p) for p in nonzero}
    if len(nonzero) != 3 or len(degrees) != 1 or not all(is_homogeneous(p) for p in nonzero):
        raise ThetaValidationError(
            ["unequal_degrees"], {"unequal_degrees": "f1, f2, f3 must be nonzero forms of one degree"}
        )
    height = ideal_height(gens)
    if height < 2:
        raise ThetaValidationError(
            ["ideal_height"], {"ideal_height": f"(f1, f2, f3) has height {height}"}
        )
    ring = gens[0].ring
    zero, one = ring.zero, ring.one
    return validate([[zero, zero, zero, one], [*gens, zero]], n, field)


def value_classes(bour: int | None, d: int) -> list[ValueClass]:
    """Every named value Bour(J) takes; d^2 - 1 may coincide with 0 or 2 for small d."""
    if bour is None:
        return []
    named = {
        ValueClass.PERFECT: 0,
        ValueClass.ONE: 1,
        ValueClass.TWO: 2,
        ValueClass.D_SQUARED_MINUS_ONE: d * d - 1,
        ValueClass.COMPLETE_INTERSECTION: d * d,
    }
    return [tag for tag, value in named.items() if value == bour]


def equigenerated(
    f1: Entry,
    f2: Entry,
    f3: Entry,
    n: int,
    field: FieldSpec | str = "QQ",
) -> EquigeneratedReport:
    """Bourbaki degree of J together with deg(R/J) and the classification flags."""
    theta = ideal_theta(f1, f2, f3, n, field)
    return equigenerated_report(run_analysis(theta, resolution=True, mode="ideal"))


def equigenerated_report(analysis: Analysis) -> EquigeneratedReport:
    """Ideal-side invariants from an analysis of Theta_J (resolution required)."""
    theta, report = analysis.theta, analysis.report
    n = theta.n
    d, e, bour = theta.d2, report.e, report.bour

    # Q = (R/J)(d)
    series_rj = analysis.series_q.shift(d)
    dim_rj = krull_dimension(series_rj)
    deg_rj = degree_at(series_rj, n - 2)
    betti_rj = analysis.resolution.betti.twisted(d) if analysis.resolution else None
    pd_rj = betti_rj.projective_dimension if betti_rj else -1
    tau = None
    if dim_rj <= 1:
        tau = int(hilbert_polynomial(series_rj).eval(0))

    complete_intersection = ideal_height([p for p in theta.g if p]) == 3
    perfect = pd_rj == 2
    saturated = pd_rj <= n - 1
    identity_ok = bour is not None and deg_rj + bour == d * d + e * e - e * d
    bound_ok = bour is None or bour <= e * e
    if not identity_ok:
        logger.warning("equigenerated_identity_failed", d=d, e=e, bour=bour, deg_rj=deg_rj)
    if not bound_ok:
        logger.warning("equigenerated_bound_exceeded", d=d, e=e, bour=bour)

    classes = value_classes(bour, d)
    if (ValueClass.PERFECT in classes) != perfect:
        logger.warning("value_class_inconsistent", tag="perfect", bour=bour, pd=pd_rj)
    if (ValueClass.COMPLETE_INTERSECTION in classes) != complete_intersection:
        logger.warning("value_class_inconsistent", tag="d^2", bour=bour, d=d)
    if d > 1 and (ValueClass.D_SQUARED_MINUS_ONE in classes) != (e == d and deg_rj == 1):
        logger.warning("value_class_inconsistent", tag="d^2-1", bour=bour, e=e, deg_rj=deg_rj)

    return EquigeneratedReport(
        d=d,
        e=e,
        bour=bour,
        deg_rj=deg_rj,
        dim_rj=dim_rj,
        tau=tau,
        complete_intersection=complete_intersection,
        perfect=perfect,
        saturated=saturated,
        identity_ok=identity_ok,
        bound_ok=bound_ok,
        value_classes=classes,
        betti_rj=betti_rj.to_models() if betti_rj else [],
        report=report,
    )

