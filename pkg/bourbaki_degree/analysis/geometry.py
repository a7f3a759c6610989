"""Jacobian matrices of pairs of forms and the regular-sequence criterion in four variables."""

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.algebra.grammar import render_poly
from bourbaki_degree.algebra.polynomials import Polynomial, degree, is_homogeneous, ring_field
from bourbaki_degree.analysis.theta import Entry, ThetaMatrix, coerce_entries, validate
from bourbaki_degree.core.errors import InvariantViolation, UsageError
from bourbaki_degree.core.models import BourbakiReport, DistributionRecord
from bourbaki_degree.hilbert.monomial import ideal_height, quotient_ring_series
from bourbaki_degree.hilbert.series import krull_dimension
from bourbaki_degree.observability.logging import get_logger

logger = get_logger(__name__)

N_VARIABLES = 4


def _forms(f: Entry, g: Entry, field: FieldSpec | str | None) -> tuple[Polynomial, Polynomial]:
    if isinstance(f, str) or isinstance(g, str):
        spec = FieldSpec.parse(field or "QQ")
        (row,) = coerce_entries([[f, g]], N_VARIABLES, spec)
        return row[0], row[1]
    if f.ring.ngens != N_VARIABLES:
        raise UsageError(f"Jacobian matrices need n = {N_VARIABLES}, got n = {f.ring.ngens}")
    (row,) = coerce_entries([[f, g]], N_VARIABLES, ring_field(f.ring))
    return row[0], row[1]


def jacobian_theta(f: Entry, g: Entry, field: FieldSpec | str | None = None) -> ThetaMatrix:
    """Theta with the gradients of f and g as rows."""
    f, g = _forms(f, g, field)
    for label, p in (("f", f), ("g", g)):
        if not p or not is_homogeneous(p) or degree(p) == 0:
            raise UsageError(f"{label} must be a nonconstant form")
    ring = f.ring
    rows = [[p.diff(x) for x in ring.gens] for p in (f, g)]
    return validate(rows, N_VARIABLES, ring_field(ring))


def euler_forms(theta: ThetaMatrix) -> tuple[Polynomial, Polynomial]:
    """(h1, h2) = Theta (x1, ..., x4)^T."""
    gens = theta.ring.gens
    h1 = sum((a * x for a, x in zip(theta.f, gens, strict=True)), theta.ring.zero)
    h2 = sum((a * x for a, x in zip(theta.g, gens, strict=True)), theta.ring.zero)
    return h1, h2


def distribution_check(
    theta: ThetaMatrix, report: BourbakiReport | None = None
) -> DistributionRecord:
    """Whether h1, h2 form a regular sequence, i.e. R/(h1, h2) has dimension n - 2.

    With a report at hand, e = 1 together with a regular sequence forces Bour <= 2.
    """
    if theta.n != N_VARIABLES:
        raise UsageError(f"the distribution criterion needs n = {N_VARIABLES}")
    h1, h2 = euler_forms(theta)
    dim = krull_dimension(quotient_ring_series([h1, h2]))
    regular = bool(h1) and bool(h2) and dim == N_VARIABLES - 2
    record = DistributionRecord(
        h1=render_poly(h1), h2=render_poly(h2), dim=dim, regular_sequence=regular
    )
    if report is not None and regular and report.e == 1 and report.bour is not None:
        if report.bour > 2:
            raise InvariantViolation(f"e = 1 with a regular sequence but Bour = {report.bour}")
    logger.debug("distribution_check", dim=dim, regular=regular)
    return record


def jacobian_distribution(f: Entry, g: Entry, theta: ThetaMatrix) -> DistributionRecord:
    """For gradients of a regular sequence (f, g) Euler's relation makes (h1, h2) regular."""
    f, g = _forms(f, g, theta.field)
    record = distribution_check(theta)
    if ideal_height([f, g]) == 2 and not record.regular_sequence:
        raise InvariantViolation("Euler forms of a regular sequence are not a regular sequence")
    return record
