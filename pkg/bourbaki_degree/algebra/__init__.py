"""Algebra Package: fields, polynomials and their text grammar."""

from bourbaki_degree.algebra.fields import RATIONALS, FieldSpec, rational_parts, secondary_field
from bourbaki_degree.algebra.grammar import parse_poly, render_poly
from bourbaki_degree.algebra.polynomials import (
    Monomial,
    MonomialOrder,
    Polynomial,
    check_same_ring,
    degree,
    elimination_ring,
    is_homogeneous,
    monomial_cmp,
    monomial_degree,
    normalize,
    poly_arith,
    polynomial_ring,
    ring_field,
    substitute_ring,
)

__all__ = [
    # Fields
    "FieldSpec",
    "RATIONALS",
    "rational_parts",
    "secondary_field",
    # Rings and orders
    "MonomialOrder",
    "polynomial_ring",
    "elimination_ring",
    "ring_field",
    # Polynomials
    "Polynomial",
    "Monomial",
    "poly_arith",
    "monomial_cmp",
    "monomial_degree",
    "is_homogeneous",
    "degree",
    "normalize",
    "check_same_ring",
    "substitute_ring",
    # Grammar
    "parse_poly",
    "render_poly",
]
