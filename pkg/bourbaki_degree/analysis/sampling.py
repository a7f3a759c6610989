"""Seeded random inputs for the property suites.

Entries are sparse forms with coefficients in -3..3; every sample is
rejection-sampled through the same validation the CLI applies.
"""

import random

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.algebra.polynomials import Polynomial, polynomial_ring
from bourbaki_degree.analysis.equigenerated import ideal_theta
from bourbaki_degree.analysis.geometry import N_VARIABLES, jacobian_theta
from bourbaki_degree.analysis.theta import ThetaMatrix, validate
from bourbaki_degree.core.errors import ThetaValidationError, UsageError
from bourbaki_degree.hilbert.monomial import ideal_height
from bourbaki_degree.oracle.dense import monomials_of_degree

COEFFICIENTS = (-3, -2, -1, 1, 2, 3)
MAX_ATTEMPTS = 500


def random_form(rng: random.Random, n: int, degree: int, field: FieldSpec, terms: int = 3) -> Polynomial:
    """A form with at most ``terms`` monomials; may be zero only when ``terms`` is 0."""
    ring = polynomial_ring(n, field)
    monomials = monomials_of_degree(n, degree)
    chosen = rng.sample(monomials, min(terms, len(monomials)))
    return ring.from_dict({m: field.element(rng.choice(COEFFICIENTS)) for m in chosen})


def _row(rng: random.Random, n: int, degree: int, field: FieldSpec) -> list[Polynomial]:
    ring = polynomial_ring(n, field)
    return [
        ring.zero if rng.random() < 0.2 else random_form(rng, n, degree, field, rng.randint(1, 3))
        for _ in range(4)
    ]


def random_theta(
    rng: random.Random,
    n: int,
    max_degree: int = 2,
    field: FieldSpec | str = "QQ",
) -> ThetaMatrix:
    """A valid Theta with row degrees in 1..max_degree."""
    field = FieldSpec.parse(field)
    for _ in range(MAX_ATTEMPTS):
        d1, d2 = rng.randint(1, max_degree), rng.randint(1, max_degree)
        rows = [_row(rng, n, d1, field), _row(rng, n, d2, field)]
        try:
            return validate(rows, n, field)
        except ThetaValidationError:
            continue
    raise UsageError(f"no valid matrix after {MAX_ATTEMPTS} attempts (n = {n})")


def random_quadric_triple(
    rng: random.Random, n: int = 3, field: FieldSpec | str = "QQ", degree: int = 2
) -> ThetaMatrix:
    """Theta_J for three forms of one degree generating an ideal of height >= 2."""
    field = FieldSpec.parse(field)
    for _ in range(MAX_ATTEMPTS):
        gens = [random_form(rng, n, degree, field, rng.randint(1, 3)) for _ in range(3)]
        try:
            return ideal_theta(*gens, n=n, field=field)
        except ThetaValidationError:
            continue
    raise UsageError(f"no height-2 triple after {MAX_ATTEMPTS} attempts")


def random_pencil_jacobian(
    rng: random.Random, field: FieldSpec | str = "QQ"
) -> tuple[Polynomial, Polynomial, ThetaMatrix]:
    """A complete intersection of two quadrics in four variables and its valid Jacobian matrix."""
    field = FieldSpec.parse(field)
    for _ in range(MAX_ATTEMPTS):
        f = random_form(rng, N_VARIABLES, 2, field, rng.randint(2, 5))
        g = random_form(rng, N_VARIABLES, 2, field, rng.randint(2, 5))
        if ideal_height([f, g]) != 2:
            continue
        try:
            return f, g, jacobian_theta(f, g)
        except (ThetaValidationError, UsageError):
            continue
    raise UsageError(f"no valid pencil after {MAX_ATTEMPTS} attempts")
