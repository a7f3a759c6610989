"""Buchberger's algorithm for graded submodules, with Schreyer cofactor tracking.

The engine processes generators and S-pairs in one queue ordered by internal
degree, ties broken by insertion order (normal strategy). When cofactors are
tracked, every generator or S-vector that reduces to zero leaves behind its
cofactor, an element of the kernel of the map sending basis vector j to
generator j.
"""

import heapq
import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm
from sympy.polys.rings import PolyRing

from bourbaki_degree.algebra.polynomials import Monomial
from bourbaki_degree.core.errors import UsageError
from bourbaki_degree.groebner.modules import FreeElement, GradedMap, ModuleOrder, default_order
from bourbaki_degree.observability.logging import get_logger
from bourbaki_degree.observability.metrics import (
    GROEBNER_BASIS_SIZE,
    SPAIRS_TOTAL,
    ZERO_REDUCTIONS_TOTAL,
)
from bourbaki_degree.observability.tracing import traced

logger = get_logger(__name__)


@dataclass(frozen=True)
class GBasis:
    """Groebner basis of a graded submodule; elements are monic."""

    ring: PolyRing
    shifts: tuple[int, ...]
    elements: tuple[FreeElement, ...]
    order: ModuleOrder
    reduced: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def is_zero(self) -> bool:
        return not self.elements

    def leading_monomials(self) -> list[tuple[int, Monomial]]:
        return [(c, m) for c, m, _ in (g.leading_term() for g in self.elements)]

    def degrees(self) -> list[int]:
        return [int(g.degree) for g in self.elements]  # type: ignore[arg-type]


@dataclass(order=True)
class _Item:
    degree: int
    serial: int
    kind: str = field(compare=False)
    payload: tuple = field(compare=False)
    alive: bool = field(default=True, compare=False)


class GroebnerEngine:
    """Incremental, degree-by-degree Buchberger completion.

    Args:
        ring: Polynomial ring of the entries.
        shifts: Shifts of the ambient free module.
        cofactor_shifts: When given, track cofactors in a free module with these
            shifts and collect syzygies. The product criterion is used only
            for untracked ideals.
    """

    def __init__(
        self,
        ring: PolyRing,
        shifts: Sequence[int],
        cofactor_shifts: Sequence[int] | None = None,
    ):
        self.ring = ring
        self.shifts = tuple(shifts)
        self.order = default_order(ring, self.shifts)
        self.cofactor_shifts = None if cofactor_shifts is None else tuple(cofactor_shifts)
        self.tracking = cofactor_shifts is not None
        # coprime leads only certify S-pairs of ideals, never of higher-rank modules
        self._product_criterion = not self.tracking and len(self.shifts) == 1

        self.basis: list[FreeElement] = []
        self.cofactors: list[FreeElement | None] = []
        self.leads: list[tuple[int, Monomial]] = []
        self.syzygies: list[FreeElement] = []

        self._queue: list[_Item] = []
        self._pairs: dict[tuple[int, int], _Item] = {}
        self._serial = itertools.count()
        self._pair_count = 0
        self._zero_count = 0

    # ------------------------------------------------------------- queueing

    def add(
        self,
        element: FreeElement,
        cofactor: FreeElement | None = None,
        degree: int | None = None,
    ) -> None:
        """Queue a homogeneous generator.

        ``degree`` is needed only for a zero element, whose cofactor then is a syzygy.
        """
        if element.shifts != self.shifts:
            raise UsageError("generator does not live in the engine's free module")
        if self.tracking and cofactor is None:
            raise UsageError("cofactor tracking needs a cofactor for every generator")
        deg = element.degree if degree is None else degree
        if deg is None:
            if cofactor is None:
                return
            deg = cofactor.degree
            if deg is None:
                return
        item = _Item(int(deg), next(self._serial), "gen", (element, cofactor))
        heapq.heappush(self._queue, item)

    @classmethod
    def from_basis(
        cls, ring: PolyRing, shifts: Sequence[int], elements: Sequence[FreeElement]
    ) -> "GroebnerEngine":
        """Engine whose basis is ``elements`` as given, for reduction only."""
        engine = cls(ring, shifts)
        for g in elements:
            c, m, _ = g.leading_term()
            engine.basis.append(g)
            engine.cofactors.append(None)
            engine.leads.append((c, m))
        return engine

    def pending_degree(self) -> int | None:
        while self._queue and not self._queue[0].alive:
            dead = heapq.heappop(self._queue)
            self._pairs.pop((dead.payload[1], dead.payload[2]), None)
        return self._queue[0].degree if self._queue else None

    # ------------------------------------------------------------ reduction

    def _reducer(self, component: int, monomial: Monomial) -> int | None:
        for k, (c, m) in enumerate(self.leads):
            if c == component and monomial_divides(m, monomial):
                return k
        return None

    def reduce(
        self, v: FreeElement, cofactor: FreeElement | None = None
    ) -> tuple[FreeElement, FreeElement | None]:
        """Full reduction of ``v``; the cofactor follows every subtraction."""
        remainder = [self.ring.zero] * len(self.shifts)
        while not v.is_zero():
            component, monomial, coeff = v.leading_term()
            k = self._reducer(component, monomial)
            if k is None:
                remainder[component] = remainder[component] + self.ring.term_new(monomial, coeff)
                v = v.without_term(component, monomial)
                continue
            quotient = monomial_div(monomial, self.leads[k][1])
            v = v - self.basis[k].mul_term(quotient, coeff)
            if cofactor is not None:
                cofactor = cofactor - self.cofactors[k].mul_term(quotient, coeff)  # type: ignore[union-attr]
        return FreeElement(self.ring, self.shifts, tuple(remainder)), cofactor

    def normal_form(self, v: FreeElement) -> FreeElement:
        return self.reduce(v)[0]

    # ------------------------------------------------------------ insertion

    def _insert(self, g: FreeElement, cofactor: FreeElement | None) -> None:
        _, _, lc = g.leading_term()
        inverse = self.ring.domain.revert(lc)
        g = g.scale(inverse)
        if cofactor is not None:
            cofactor = cofactor.scale(inverse)
        component, monomial, _ = g.leading_term()
        k = len(self.basis)

        # chain criterion: (i, j) is redundant once k's lead divides lcm(i, j)
        # and the pairs (i, k), (j, k) have strictly smaller lcms
        for (i, j), item in self._pairs.items():
            if not item.alive or self.leads[i][0] != component:
                continue
            lcm_ij = item.payload[0]
            if not monomial_divides(monomial, lcm_ij):
                continue
            if (
                monomial_lcm(self.leads[i][1], monomial) != lcm_ij
                and monomial_lcm(self.leads[j][1], monomial) != lcm_ij
            ):
                item.alive = False

        self.basis.append(g)
        self.cofactors.append(cofactor)
        self.leads.append((component, monomial))

        for i, (c, m) in enumerate(self.leads[:-1]):
            if c != component:
                continue
            lcm = monomial_lcm(m, monomial)
            if self._product_criterion and lcm == tuple(
                a + b for a, b in zip(m, monomial, strict=True)
            ):
                continue
            item = _Item(sum(lcm) + self.shifts[component], next(self._serial), "pair", (lcm, i, k))
            self._pairs[(i, k)] = item
            heapq.heappush(self._queue, item)

    def _s_vector(
        self, lcm: Monomial, i: int, j: int
    ) -> tuple[FreeElement, FreeElement | None]:
        one = self.ring.domain.one
        ui = monomial_div(lcm, self.leads[i][1])
        uj = monomial_div(lcm, self.leads[j][1])
        s = self.basis[i].mul_term(ui, one) - self.basis[j].mul_term(uj, one)
        cofactor = None
        if self.tracking:
            cofactor = self.cofactors[i].mul_term(ui, one) - self.cofactors[j].mul_term(uj, one)  # type: ignore[union-attr]
        return s, cofactor

    # ----------------------------------------------------------- completion

    def complete(self, max_degree: int | None = None) -> None:
        """Process queued generators and pairs up to ``max_degree`` (all when None)."""
        while True:
            degree = self.pending_degree()
            if degree is None or (max_degree is not None and degree > max_degree):
                break
            item = heapq.heappop(self._queue)
            if item.kind == "gen":
                v, cofactor = item.payload
            else:
                lcm, i, j = item.payload
                self._pairs.pop((i, j), None)
                self._pair_count += 1
                v, cofactor = self._s_vector(lcm, i, j)
            remainder, cofactor = self.reduce(v, cofactor)
            if remainder.is_zero():
                self._zero_count += 1
                if cofactor is not None and not cofactor.is_zero():
                    self.syzygies.append(cofactor)
            else:
                self._insert(remainder, cofactor)
        SPAIRS_TOTAL.inc(self._pair_count)
        ZERO_REDUCTIONS_TOTAL.inc(self._zero_count)
        self._pair_count = self._zero_count = 0

    # --------------------------------------------------------------- output

    def reduced_basis(self) -> GBasis:
        """Minimalize, then interreduce the completed basis."""
        minimal = [
            g
            for k, g in enumerate(self.basis)
            if not any(
                k != other
                and self.leads[other][0] == self.leads[k][0]
                and monomial_divides(self.leads[other][1], self.leads[k][1])
                for other in range(len(self.basis))
            )
        ]
        minimal.sort(key=lambda g: g.sort_key(self.order))
        reduced: list[FreeElement] = []
        for idx, g in enumerate(minimal):
            others = GroebnerEngine.from_basis(self.ring, self.shifts, reduced + minimal[idx + 1 :])
            reduced.append(others.normal_form(g).monic())
        GROEBNER_BASIS_SIZE.observe(len(reduced))
        return GBasis(self.ring, self.shifts, tuple(reduced), self.order, reduced=True)


# ============================================================================
# Operations
# ============================================================================


def _ambient(gens: Sequence[FreeElement], ring: PolyRing | None, shifts: Sequence[int] | None):
    if gens:
        return gens[0].ring, gens[0].shifts
    if ring is None or shifts is None:
        raise UsageError("empty generator list needs an explicit ring and shifts")
    return ring, tuple(shifts)


def buchberger(
    gens: Sequence[FreeElement],
    order: ModuleOrder | None = None,
    *,
    ring: PolyRing | None = None,
    shifts: Sequence[int] | None = None,
) -> GBasis:
    """Reduced Groebner basis of the submodule generated by ``gens``."""
    ring, shifts = _ambient(gens, ring, shifts)
    engine = GroebnerEngine(ring, shifts)
    if order is not None and order.shifts != engine.order.shifts:
        raise UsageError("module order shifts differ from the generators' shifts")
    for g in gens:
        engine.add(g)
    engine.complete()
    gb = engine.reduced_basis()
    logger.debug("groebner_basis", generators=len(gens), size=len(gb))
    return gb


def normal_form(v: FreeElement, gb: GBasis) -> FreeElement:
    """Remainder of ``v`` with no term divisible by a leading term of ``gb``."""
    if v.shifts != gb.shifts:
        raise UsageError("vector and basis live in different free modules")
    return GroebnerEngine.from_basis(gb.ring, gb.shifts, gb.elements).normal_form(v)


@dataclass(frozen=True)
class KernelResult:
    """Generators of ker(map) plus a Groebner basis of its image."""

    syzygies: tuple[FreeElement, ...]
    image: GBasis


@traced("groebner.kernel")
def kernel_and_image(gmap: GradedMap) -> KernelResult:
    engine = GroebnerEngine(gmap.ring, gmap.target_shifts, cofactor_shifts=gmap.source_shifts)
    for j, column in enumerate(gmap.columns()):
        unit = FreeElement.basis(gmap.ring, gmap.source_shifts, j)
        engine.add(column, cofactor=unit, degree=gmap.source_shifts[j])
    engine.complete()
    logger.debug(
        "kernel",
        shape=gmap.shape,
        basis=len(engine.basis),
        syzygies=len(engine.syzygies),
    )
    return KernelResult(tuple(engine.syzygies), engine.reduced_basis())


def kernel(gmap: GradedMap) -> list[FreeElement]:
    """Homogeneous generators of the kernel of ``gmap`` (not necessarily minimal)."""
    return list(kernel_and_image(gmap).syzygies)


def minimal_generator_indices(elements: Sequence[FreeElement]) -> list[int]:
    """Indices of a minimal generating subset, scanning by ascending degree.

    An element is kept when it does not lie in the span of the kept elements of
    lower or equal degree; ties keep input order.
    """
    candidates = sorted(
        (i for i, v in enumerate(elements) if not v.is_zero()),
        key=lambda i: (elements[i].degree, i),
    )
    if not candidates:
        return []
    first = elements[candidates[0]]
    engine = GroebnerEngine(first.ring, first.shifts)
    kept: list[int] = []
    for i in candidates:
        v = elements[i]
        engine.complete(max_degree=v.degree)
        if engine.normal_form(v).is_zero():
            continue
        kept.append(i)
        engine.add(v)
    return kept


def minimal_generators(elements: Sequence[FreeElement]) -> list[FreeElement]:
    return [elements[i] for i in minimal_generator_indices(elements)]
