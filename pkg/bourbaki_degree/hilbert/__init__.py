"""Hilbert Package: series, coefficients and Hilbert polynomials."""

from bourbaki_degree.hilbert.monomial import (
    hilbert_of_quotient,
    hilbert_of_submodule,
    ideal_height,
    initial_degree,
    minimalize_monomials,
    monomial_quotient_numerator,
    quotient_ring_series,
)
from bourbaki_degree.hilbert.series import (
    HilbertCoefficients,
    HilbertSeries,
    RankOneQuotient,
    coefficients,
    degree_at,
    hilbert_polynomial,
    krull_dimension,
    rank_one_quotient,
    render_polynomial,
)

__all__ = [
    # Series
    "HilbertSeries",
    "HilbertCoefficients",
    "coefficients",
    "degree_at",
    "krull_dimension",
    "hilbert_polynomial",
    "render_polynomial",
    "RankOneQuotient",
    "rank_one_quotient",
    # Modules and ideals
    "hilbert_of_quotient",
    "hilbert_of_submodule",
    "initial_degree",
    "quotient_ring_series",
    "ideal_height",
    "minimalize_monomials",
    "monomial_quotient_numerator",
]
