"""Numeric invariants of Theta and its Bourbaki degree.

With e the initial degree of Syz(Theta), e0 and e1 (raw) the Hilbert
coefficients of Q = coker(Theta) at pole order n-1, q = d1^2 + d2^2 + d1 d2
and l = (e0^2 + e0)/2, the Bourbaki degree of any minimal syzygy of degree
e >= 1 is

    Bour = (e - d)(e + e0) + q + l + e1

and it is cross-checked against the degree of R/I read off the Hilbert
series of Syz(Theta)/R(-e).
"""

import time
from dataclasses import dataclass
from fractions import Fraction

from bourbaki_degree.algebra.grammar import render_poly
from bourbaki_degree.analysis.theta import ThetaMatrix
from bourbaki_degree.core.errors import InvariantViolation, UnsupportedCase
from bourbaki_degree.core.models import (
    BoundsModel,
    BourbakiIdealModel,
    BourbakiReport,
    FlagsModel,
    ShapeTag,
)
from bourbaki_degree.groebner.buchberger import (
    GBasis,
    KernelResult,
    buchberger,
    kernel_and_image,
    minimal_generators,
)
from bourbaki_degree.groebner.modules import FreeElement
from bourbaki_degree.hilbert.monomial import hilbert_of_quotient, hilbert_of_submodule, initial_degree
from bourbaki_degree.hilbert.series import (
    HilbertCoefficients,
    HilbertSeries,
    RankOneQuotient,
    coefficients,
    hilbert_polynomial,
    rank_one_quotient,
    render_polynomial,
)
from bourbaki_degree.observability.logging import get_logger
from bourbaki_degree.observability.metrics import record_analysis_metrics
from bourbaki_degree.observability.tracing import traced
from bourbaki_degree.resolution.betti import BettiTable
from bourbaki_degree.resolution.minimal import Resolution, minimal_resolution, resolve_submodule
from bourbaki_degree.resolution.shapes import expected_shape, shape_match

logger = get_logger(__name__)


# ============================================================================
# Syzygies
# ============================================================================


def psi_syzygies(theta: ThetaMatrix) -> list[FreeElement]:
    """The four syzygies of degree d built from 2-minors.

    Omitting column k, the triple i < j < l gives
    D_jl e_i - D_il e_j + D_ij e_l, which Theta kills by Laplace expansion.
    """
    ring = theta.ring
    gmap = theta.graded_map()
    out = []
    for omitted in range(4):
        i, j, l = (c for c in range(4) if c != omitted)
        parts = [ring.zero] * 4
        parts[i] = theta.minor(j, l)
        parts[j] = -theta.minor(i, l)
        parts[l] = theta.minor(i, j)
        v = FreeElement(ring, (0, 0, 0, 0), tuple(parts))
        if not gmap.apply(v).is_zero():
            raise InvariantViolation(f"column {omitted + 1} of the minor matrix is not a syzygy")
        out.append(v)
    return out


def choose_generator(syz_gb: GBasis, e: int) -> FreeElement:
    """Order-least Groebner basis element of the initial degree."""
    candidates = [g for g in syz_gb.elements if g.degree == e]
    if not candidates:
        raise InvariantViolation(f"no basis element in the initial degree {e}")
    return min(candidates, key=lambda g: g.sort_key(syz_gb.order))


def bourbaki_ideal(
    theta: ThetaMatrix, nu: FreeElement, syz_series: HilbertSeries | None = None
) -> RankOneQuotient:
    """Hilbert data of Syz(Theta)/R(-e) nu = I(s)."""
    e = nu.degree
    if e is None or e == 0:
        raise UnsupportedCase("the Bourbaki construction needs a syzygy of degree e >= 1")
    if not theta.graded_map().apply(nu).is_zero():
        raise InvariantViolation("the chosen element is not a syzygy of Theta")
    if syz_series is None:
        syz_gb = buchberger(
            kernel_and_image(theta.graded_map()).syzygies, ring=theta.ring, shifts=(0, 0, 0, 0)
        )
        syz_series = hilbert_of_submodule((0, 0, 0, 0), syz_gb)
    return rank_one_quotient(syz_series - HilbertSeries.free((e,), theta.n))


def bourbaki_degree_direct(
    theta: ThetaMatrix, nu: FreeElement, syz_series: HilbertSeries | None = None
) -> int:
    """deg(R/I) for the Bourbaki ideal of ``nu``; 0 when Theta is free."""
    return bourbaki_ideal(theta, nu, syz_series).degree


def bourbaki_formula(d1: int, d2: int, e: int, e0: int, e1_raw: int) -> int:
    d = d1 + d2
    return (e - d) * (e + e0) + quadratic_part(d1, d2) + ell(e0) + e1_raw


def quadratic_part(d1: int, d2: int) -> int:
    return d1 * d1 + d2 * d2 + d1 * d2


def ell(e0: int) -> int:
    return (e0 * e0 + e0) // 2


def check_bounds(d1: int, d2: int, e: int, e0: int, e1_raw: int, bour: int | None) -> BoundsModel:
    """Range checks on e and e0 and the upper and lower bounds on Bour."""
    d = d1 + d2
    bounds = BoundsModel(e_in_range=0 <= e <= d, e0_in_range=0 <= e0 <= d)
    if bour is None:
        return bounds
    upper = quadratic_part(d1, d2) + ell(e0) + e1_raw
    lower = Fraction(upper) - Fraction((d + e0) ** 2, 4)
    bounds.upper = upper
    bounds.lower = float(lower)
    bounds.upper_ok = bour <= upper
    bounds.equality_iff_e_is_d = (bour == upper) == (e == d)
    bounds.lower_ok = bour >= lower
    return bounds


# ============================================================================
# Analysis
# ============================================================================


@dataclass(frozen=True)
class Analysis:
    """A report together with the algebra it was computed from."""

    theta: ThetaMatrix
    report: BourbakiReport
    kernel: KernelResult
    syz_gb: GBasis
    series_q: HilbertSeries
    series_syz: HilbertSeries
    coefficients: HilbertCoefficients
    minimal_syzygies: tuple[FreeElement, ...]
    resolution: Resolution | None
    syz_betti: BettiTable | None


def _syzygy_betti(theta: ThetaMatrix, res: Resolution, minimal: list[FreeElement]) -> BettiTable:
    """Betti table of Syz(Theta); read off Q's resolution when the presentation was minimal."""
    untouched = (
        len(res.free_modules) >= 2
        and res.free_modules[0] == (-theta.d1, -theta.d2)
        and res.free_modules[1] == (0, 0, 0, 0)
    )
    if untouched:
        return res.betti.truncated(2)
    return resolve_submodule(theta.ring, (0, 0, 0, 0), minimal).betti


def _ideal_model(
    quotient: RankOneQuotient, nu: FreeElement, syz_betti: BettiTable | None, e: int
) -> BourbakiIdealModel:
    polynomial = hilbert_polynomial(quotient.ideal_series)
    betti = None
    if syz_betti is not None and syz_betti.total(0) == 3 and syz_betti.total(1) == 1:
        # complete intersection: drop nu from the generators and untwist by s
        rest = syz_betti.degrees(0)
        rest.remove(e)
        (relation,) = syz_betti.degrees(1)
        s = quotient.sigma
        betti = BettiTable.from_shifts(
            [(0,), tuple(a + s for a in rest), (relation + s,)]
        ).to_models()
    return BourbakiIdealModel(
        shift=quotient.sigma,
        degree=quotient.degree,
        free=quotient.free,
        hilbert_polynomial=render_polynomial(polynomial),
        constant_term=str(polynomial.eval(0)),
        generator=[render_poly(p) for p in nu.components],
        betti=betti,
    )


@traced("analysis.analyze")
def run_analysis(
    theta: ThetaMatrix,
    *,
    resolution: bool = True,
    max_length: int | None = None,
    mode: str = "matrix",
) -> Analysis:
    """Compute every invariant of Theta, cross-checking formula and direct routes."""
    started = time.perf_counter()
    n, d1, d2, d = theta.n, theta.d1, theta.d2, theta.d
    gmap = theta.graded_map()

    kernel = kernel_and_image(gmap)
    syz_gb = buchberger(kernel.syzygies, ring=theta.ring, shifts=gmap.source_shifts)
    e = initial_degree(syz_gb)
    series_q = hilbert_of_quotient(gmap.target_shifts, kernel.image)
    series_syz = hilbert_of_submodule(gmap.source_shifts, syz_gb)
    additivity = (
        HilbertSeries.free(gmap.source_shifts, n)
        - HilbertSeries.free(gmap.target_shifts, n)
        + series_q
    )
    if not additivity.equals(series_syz):
        raise InvariantViolation("Hilb(Syz) != Hilb(R^4) - Hilb(F_0) + Hilb(Q)")

    coeffs = coefficients(series_q)
    e0, e1_raw = coeffs.e0, coeffs.e1_raw
    q, l_q = quadratic_part(d1, d2), ell(e0)
    minimal = minimal_generators(list(kernel.syzygies))

    res: Resolution | None = None
    syz_betti: BettiTable | None = None
    shape: ShapeTag | None = None
    pd_q = depth_q = None
    if resolution:
        res = minimal_resolution(gmap, max_length)
        pd_q = res.projective_dimension
        depth_q = n - pd_q
        shape = shape_match(res.betti, d1, d2, e, e0)
        syz_betti = _syzygy_betti(theta, res, minimal)

    compressible = e == 0
    s: int
    bour = bour_direct = bour_formula = None
    ideal_model = None
    if compressible:
        s = e0 - d
    else:
        s = e - d + e0
        bour_formula = bourbaki_formula(d1, d2, e, e0, e1_raw)
        nu = choose_generator(syz_gb, e)
        quotient = bourbaki_ideal(theta, nu, series_syz)
        if quotient.sigma != s:
            raise InvariantViolation(f"Bourbaki shift {quotient.sigma} differs from s = {s}")
        bour_direct = quotient.degree
        if bour_direct != bour_formula:
            raise InvariantViolation(
                f"Bourbaki degree by formula ({bour_formula}) != direct ({bour_direct})"
            )
        bour = bour_formula
        ideal_model = _ideal_model(quotient, nu, syz_betti, e)

    free = pd_q <= 2 if pd_q is not None else (compressible or bour == 0)
    flags = FlagsModel(
        free=free,
        nearly_free=bour == 1,
        three_syzygy=len(minimal) == 3,
        br_shape=shape == ShapeTag.BUCHSBAUM_RIM,
        compressible=compressible,
    )
    if bour is not None and (bour == 0) != free:
        raise InvariantViolation(f"freeness flag {free} disagrees with Bour = {bour}")

    bounds = check_bounds(d1, d2, e, e0, e1_raw, bour)
    if not bounds.all_ok:
        logger.warning("bounds_violated", d1=d1, d2=d2, e=e, e0=e0, bour=bour)

    if coeffs.dim <= n - 3 and not compressible:
        if bour != q:
            raise InvariantViolation(f"dim Q <= n-3 but Bour = {bour} != q = {q}")
        if res is not None and d1 >= 1 and shape != ShapeTag.BUCHSBAUM_RIM:
            raise InvariantViolation("dim Q <= n-3 without a Buchsbaum-Rim resolution")
    if e0 == d and syz_betti is not None:
        if syz_betti.length != 0 or syz_betti.total(0) != 2:
            raise InvariantViolation("e0 = d but Syz(Theta) is not free of rank two")

    expected = expected_shape(shape, d1, d2, e, e0) if shape is not None else None
    report = BourbakiReport(
        n=n,
        field=theta.field.label,
        rows=theta.rendered(),
        swapped=theta.swapped,
        d1=d1,
        d2=d2,
        d=d,
        e=e,
        e0=e0,
        e1_raw=e1_raw,
        e1=coeffs.e1_signed,
        q=q,
        ell=l_q,
        s=s,
        bour=bour,
        bour_formula=bour_formula,
        bour_direct=bour_direct,
        dim_q=coeffs.dim,
        depth_q=depth_q,
        pd_q=pd_q,
        shape=shape,
        flags=flags,
        bounds=bounds,
        bounds_ok=bounds.all_ok,
        series_q=series_q.to_model(),
        series_q_twisted=series_q.shift(d2).to_model(),
        series_syz=series_syz.to_model(),
        hilbert_polynomial_q=render_polynomial(hilbert_polynomial(series_q)),
        betti_q=res.betti.to_models() if res else None,
        betti_q_twisted=res.betti.twisted(d2).to_models() if res else None,
        betti_syz=syz_betti.to_models() if syz_betti else None,
        expected_betti=expected.to_models() if expected else None,
        bourbaki_ideal=ideal_model,
    )
    elapsed = time.perf_counter() - started
    record_analysis_metrics(mode, elapsed, pd_q)
    logger.info(
        "analyzed",
        n=n,
        d1=d1,
        d2=d2,
        e=e,
        e0=e0,
        e1=coeffs.e1_signed,
        bour=bour,
        shape=shape.value if shape else None,
        seconds=round(elapsed, 3),
    )
    return Analysis(
        theta=theta,
        report=report,
        kernel=kernel,
        syz_gb=syz_gb,
        series_q=series_q,
        series_syz=series_syz,
        coefficients=coeffs,
        minimal_syzygies=tuple(minimal),
        resolution=res,
        syz_betti=syz_betti,
    )


def analyze(theta: ThetaMatrix, *, resolution: bool = True) -> BourbakiReport:
    """Full invariant report of a validated Theta."""
    return run_analysis(theta, resolution=resolution).report
