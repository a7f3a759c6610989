"""Homogeneous ideals as rank-one submodules, and ideal intersection."""

from collections.abc import Sequence

from sympy.polys.groebnertools import groebner

from bourbaki_degree.algebra.polynomials import (
    Polynomial,
    check_same_ring,
    elimination_ring,
    ring_field,
    substitute_ring,
)
from bourbaki_degree.core.errors import UsageError
from bourbaki_degree.groebner.buchberger import GBasis, buchberger, normal_form
from bourbaki_degree.groebner.modules import FreeElement
from bourbaki_degree.observability.logging import get_logger

logger = get_logger(__name__)


def as_elements(polys: Sequence[Polynomial], shift: int = 0) -> list[FreeElement]:
    """Forms as elements of the rank-one module R(-shift)."""
    if not polys:
        return []
    ring = polys[0].ring
    return [FreeElement.from_polys(ring, (shift,), [p]) for p in polys]


def ideal_basis(polys: Sequence[Polynomial]) -> GBasis:
    """Reduced Groebner basis of the ideal generated by nonzero forms."""
    if not polys:
        raise UsageError("ideal needs at least one generator to fix its ring")
    for p in polys[1:]:
        check_same_ring(polys[0], p)
    return buchberger(as_elements(polys), ring=polys[0].ring, shifts=(0,))


def ideal_contains(gb: GBasis, p: Polynomial) -> bool:
    return normal_form(FreeElement(gb.ring, (0,), (p,)), gb).is_zero()


def intersect_ideals(first: Sequence[Polynomial], second: Sequence[Polynomial]) -> list[Polynomial]:
    """Homogeneous generators of the intersection of two homogeneous ideals.

    Eliminates t from t*I + (1 - t)*J in k[t, x1..xn]; the t-free part of the
    reduced Groebner basis generates the intersection.
    """
    nonzero_first = [p for p in first if p]
    nonzero_second = [p for p in second if p]
    if not nonzero_first or not nonzero_second:
        return []
    ring = nonzero_first[0].ring
    for p in [*nonzero_first, *nonzero_second]:
        check_same_ring(ring.zero, p)

    big = elimination_ring(ring.ngens, ring_field(ring))
    t = big.gens[0]
    lifted = [t * substitute_ring(p, big, offset=1) for p in nonzero_first]
    lifted += [(1 - t) * substitute_ring(p, big, offset=1) for p in nonzero_second]
    basis = groebner(lifted, big)

    result = []
    for g in basis:
        if any(m[0] for m in g.itermonoms()):
            continue
        result.append(ring.from_dict({m[1:]: c for m, c in g.items()}))
    logger.debug("intersect_ideals", first=len(first), second=len(second), result=len(result))
    return result


def ideal_product(first: Sequence[Polynomial], second: Sequence[Polynomial]) -> list[Polynomial]:
    return [f * g for f in first if f for g in second if g]
