"""Analysis Package: validation of Theta, its invariants and the Bourbaki degree."""

from bourbaki_degree.analysis.equigenerated import (
    equigenerated,
    equigenerated_report,
    ideal_theta,
    value_classes,
)
from bourbaki_degree.analysis.geometry import (
    distribution_check,
    euler_forms,
    jacobian_distribution,
    jacobian_theta,
)
from bourbaki_degree.analysis.invariants import (
    Analysis,
    analyze,
    bourbaki_degree_direct,
    bourbaki_formula,
    bourbaki_ideal,
    check_bounds,
    choose_generator,
    psi_syzygies,
    run_analysis,
)
from bourbaki_degree.analysis.rowwise import emax_check, row_formula, row_wise
from bourbaki_degree.analysis.sampling import random_pencil_jacobian, random_quadric_triple, random_theta
from bourbaki_degree.analysis.theta import ThetaMatrix, validate

__all__ = [
    # Theta
    "ThetaMatrix",
    "validate",
    # Invariants
    "Analysis",
    "analyze",
    "run_analysis",
    "psi_syzygies",
    "choose_generator",
    "bourbaki_ideal",
    "bourbaki_degree_direct",
    "bourbaki_formula",
    "check_bounds",
    # Equigenerated ideals
    "equigenerated",
    "equigenerated_report",
    "ideal_theta",
    "value_classes",
    # Rows
    "row_wise",
    "row_formula",
    "emax_check",
    # Geometry
    "jacobian_theta",
    "euler_forms",
    "distribution_check",
    "jacobian_distribution",
    # Sampling
    "random_theta",
    "random_quadric_triple",
    "random_pencil_jacobian",
]
