"""Brute-force graded dimensions by exact dense linear algebra.

No Groebner basis is involved: a graded piece is spanned by explicit
monomial multiples and its dimension is a matrix rank over the field.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyRing

from bourbaki_degree.algebra.polynomials import Monomial
from bourbaki_degree.core.models import OracleRow
from bourbaki_degree.groebner.modules import FreeElement, GradedMap
from bourbaki_degree.hilbert.series import HilbertSeries
from bourbaki_degree.observability.logging import get_logger

logger = get_logger(__name__)

Slot = tuple[int, Monomial]


@lru_cache(maxsize=512)
def monomials_of_degree(n: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree ``degree`` in n variables; none if negative."""
    if degree < 0:
        return ()
    result = []
    for combo in combinations_with_replacement(range(n), degree):
        exponents = [0] * n
        for i in combo:
            exponents[i] += 1
        result.append(tuple(exponents))
    return tuple(sorted(result, reverse=True))


def graded_piece(n: int, shifts: Sequence[int], degree: int) -> list[Slot]:
    """Basis of the degree piece of R(-a_1) + ... + R(-a_k)."""
    return [(i, m) for i, a in enumerate(shifts) for m in monomials_of_degree(n, degree - a)]


@dataclass(frozen=True)
class DenseGradedMap:
    """One graded piece of a map, as an explicit matrix."""

    degree: int
    rows: tuple[Slot, ...]
    columns: tuple[Slot, ...]
    matrix: DomainMatrix

    def rank(self) -> int:
        if not self.rows or not self.columns:
            return 0
        return self.matrix.rank()


def _dense(
    ring: PolyRing,
    target_shifts: Sequence[int],
    degree: int,
    images: list[tuple[Slot, FreeElement]],
) -> DenseGradedMap:
    rows = graded_piece(ring.ngens, target_shifts, degree)
    index = {slot: r for r, slot in enumerate(rows)}
    domain = ring.domain
    entries = [[domain.zero] * len(images) for _ in rows]
    for c, (_, image) in enumerate(images):
        for i, p in enumerate(image.components):
            for monomial, coeff in p.items():
                entries[index[(i, monomial)]][c] = coeff
    matrix = DomainMatrix(entries, (len(rows), len(images)), domain)
    return DenseGradedMap(degree, tuple(rows), tuple(s for s, _ in images), matrix)


def dense_piece(gmap: GradedMap, degree: int) -> DenseGradedMap:
    """Matrix of ``gmap`` from the degree piece of its source to that of its target."""
    n = gmap.ring.ngens
    one = gmap.ring.domain.one
    columns = gmap.columns()
    images = [
        ((j, m), columns[j].mul_term(m, one))
        for j, m in graded_piece(n, gmap.source_shifts, degree)
    ]
    return _dense(gmap.ring, gmap.target_shifts, degree, images)


def graded_kernel_dim(gmap: GradedMap, degree: int) -> int:
    """dim of ker(gmap) in internal degree ``degree``."""
    piece = dense_piece(gmap, degree)
    return len(piece.columns) - piece.rank()


def hilbert_function_bruteforce(
    ambient: Sequence[int],
    generators: Sequence[FreeElement],
    degree: int,
    ring: PolyRing | None = None,
) -> int:
    """dim of the degree piece of the submodule spanned by ``generators``."""
    nonzero = [g for g in generators if not g.is_zero()]
    if not nonzero:
        return 0
    ring = ring or nonzero[0].ring
    one = ring.domain.one
    images = [
        ((k, m), g.mul_term(m, one))
        for k, g in enumerate(nonzero)
        for m in monomials_of_degree(ring.ngens, degree - int(g.degree))  # type: ignore[arg-type]
    ]
    if not images:
        return 0
    return _dense(ring, ambient, degree, images).rank()


def quotient_dim_bruteforce(
    ambient: Sequence[int],
    generators: Sequence[FreeElement],
    degree: int,
    ring: PolyRing,
) -> int:
    """dim of the degree piece of ambient / span(generators)."""
    total = len(graded_piece(ring.ngens, ambient, degree))
    return total - hilbert_function_bruteforce(ambient, generators, degree, ring)


def oracle_table(
    gmap: GradedMap,
    kernel_series: HilbertSeries,
    cokernel_series: HilbertSeries,
    max_degree: int,
) -> list[OracleRow]:
    """Kernel and cokernel dimensions of ``gmap`` against series coefficients, degree by degree."""
    start = min(0, *gmap.target_shifts)
    columns = gmap.columns()
    rows = []
    for t in range(start, max_degree + 1):
        rows.append(
            OracleRow(
                degree=t,
                kernel_dim=graded_kernel_dim(gmap, t),
                kernel_dim_series=kernel_series.coefficient(t),
                quotient_dim=quotient_dim_bruteforce(gmap.target_shifts, columns, t, gmap.ring),
                quotient_dim_series=cokernel_series.coefficient(t),
            )
        )
    disagreements = [r.degree for r in rows if not r.agree]
    if disagreements:
        logger.warning("oracle_disagreement", degrees=disagreements)
    return rows
