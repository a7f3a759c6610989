"""Hilbert series of graded quotients and submodules via their leading-term modules.

A quotient by a submodule has the series of the quotient by its leading-term
module, which splits into one monomial ideal per component. Monomial ideals
are handled by the pivot recursion

    N(I) = N(I + (x)) + t * N(I : x)

on the most frequent variable among the generators that are not pure powers.
"""

from collections import Counter
from collections.abc import Sequence
from functools import lru_cache

from sympy.polys.monomials import monomial_divides
from sympy.polys.rings import PolyElement

from bourbaki_degree.algebra.polynomials import Monomial, Polynomial
from bourbaki_degree.core.errors import UnsupportedCase
from bourbaki_degree.groebner.buchberger import GBasis
from bourbaki_degree.groebner.ideals import ideal_basis
from bourbaki_degree.hilbert.series import T, T_RING, HilbertSeries, join_laurent, krull_dimension


def minimalize_monomials(gens: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators of a monomial ideal, in sorted order."""
    unique = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in unique:
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@lru_cache(maxsize=8192)
def _numerator(gens: tuple[Monomial, ...]) -> PolyElement:
    if not gens:
        return T_RING.one
    if any(sum(g) == 0 for g in gens):
        return T_RING.zero
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        result = T_RING.one
        for g in gens:
            result *= 1 - T ** sum(g)
        return result

    counts: Counter[int] = Counter(i for g in mixed for i, e in enumerate(g) if e)
    pivot = min(counts, key=lambda i: (-counts[i], i))
    variable = tuple(1 if i == pivot else 0 for i in range(len(gens[0])))

    plus = minimalize_monomials([g for g in gens if not g[pivot]] + [variable])
    colon = minimalize_monomials(
        [tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g)) for g in gens]
    )
    return _numerator(plus) + T * _numerator(colon)


def monomial_quotient_numerator(gens: Sequence[Monomial]) -> dict[int, int]:
    """Numerator of Hilb(R/I) over (1-t)^n for a monomial ideal I."""
    return join_laurent(0, _numerator(minimalize_monomials(gens)))


def hilbert_of_quotient(ambient: Sequence[int], sub_gb: GBasis) -> HilbertSeries:
    """Series of (R(-a_1) + ... + R(-a_k)) / sub."""
    n = sub_gb.ring.ngens
    if tuple(ambient) != sub_gb.shifts:
        raise UnsupportedCase("basis lives in a different free module")
    leads: dict[int, list[Monomial]] = {i: [] for i in range(len(ambient))}
    for component, monomial in sub_gb.leading_monomials():
        leads[component].append(monomial)
    numerator: dict[int, int] = {}
    for i, shift in enumerate(ambient):
        for e, c in monomial_quotient_numerator(leads[i]).items():
            numerator[e + shift] = numerator.get(e + shift, 0) + c
    return HilbertSeries.build(numerator, n, n)


def hilbert_of_submodule(ambient: Sequence[int], sub_gb: GBasis) -> HilbertSeries:
    """Series of the submodule itself: ambient minus quotient."""
    n = sub_gb.ring.ngens
    return HilbertSeries.free(list(ambient), n) - hilbert_of_quotient(ambient, sub_gb)


def initial_degree(sub_gb: GBasis) -> int:
    """Smallest internal degree of a nonzero element."""
    if sub_gb.is_zero():
        raise UnsupportedCase("empty module has no initial degree")
    return min(sub_gb.degrees())


def quotient_ring_series(polys: Sequence[Polynomial]) -> HilbertSeries:
    """Series of R/(polys); the zero ideal gives R."""
    nonzero = [p for p in polys if p]
    if not nonzero:
        n = polys[0].ring.ngens
        return HilbertSeries.free((0,), n)
    gb = ideal_basis(nonzero)
    return hilbert_of_quotient((0,), gb)


def ideal_height(polys: Sequence[Polynomial]) -> int:
    """n - dim R/I; the unit ideal reports n + 1."""
    n = polys[0].ring.ngens
    return n - krull_dimension(quotient_ring_series(polys))
