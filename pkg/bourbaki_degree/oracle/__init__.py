"""Oracle Package: Groebner-free dimension counts."""

from bourbaki_degree.oracle.dense import (
    DenseGradedMap,
    dense_piece,
    graded_kernel_dim,
    graded_piece,
    hilbert_function_bruteforce,
    monomials_of_degree,
    oracle_table,
    quotient_dim_bruteforce,
)

__all__ = [
    "DenseGradedMap",
    "dense_piece",
    "graded_kernel_dim",
    "graded_piece",
    "hilbert_function_bruteforce",
    "monomials_of_degree",
    "oracle_table",
    "quotient_dim_bruteforce",
]
