"""Shifted graded free modules, their elements, orders and graded maps.

An element of F = R(-a_1) + ... + R(-a_k) is a tuple of k polynomials; a
nonzero component i of degree p contributes internal degree p + a_i. The
matrix Theta is the map R^4 -> R(d1) + R(d2), i.e. source shifts (0, 0, 0, 0)
and target shifts (-d1, -d2).
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from sympy.polys.rings import PolyRing

from bourbaki_degree.algebra.polynomials import Monomial, MonomialOrder, Polynomial
from bourbaki_degree.core.errors import InvariantViolation, UsageError

LeadingTerm = tuple[int, Monomial, object]


@dataclass(frozen=True)
class ModuleOrder:
    """Shifted degree first, then position over term (lower index wins), then degrevlex."""

    shifts: tuple[int, ...]
    base: MonomialOrder

    def key(self, component: int, monomial: Monomial) -> tuple[object, ...]:
        return (
            sum(monomial) + self.shifts[component],
            -component,
            self.base.key(monomial),
        )


@dataclass(frozen=True, eq=False)
class FreeElement:
    """Homogeneous element of a shifted free module."""

    ring: PolyRing
    shifts: tuple[int, ...]
    components: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if len(self.components) != len(self.shifts):
            raise UsageError("component count differs from ambient rank")

    # ------------------------------------------------------------------ build

    @classmethod
    def zero(cls, ring: PolyRing, shifts: Sequence[int]) -> "FreeElement":
        return cls(ring, tuple(shifts), tuple(ring.zero for _ in shifts))

    @classmethod
    def basis(cls, ring: PolyRing, shifts: Sequence[int], index: int) -> "FreeElement":
        parts = [ring.zero] * len(shifts)
        parts[index] = ring.one
        return cls(ring, tuple(shifts), tuple(parts))

    @classmethod
    def from_polys(
        cls, ring: PolyRing, shifts: Sequence[int], polys: Iterable[Polynomial]
    ) -> "FreeElement":
        element = cls(ring, tuple(shifts), tuple(ring(p) for p in polys))
        element.check_homogeneous()
        return element

    # ------------------------------------------------------------ properties

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def is_zero(self) -> bool:
        return not any(self.components)

    @cached_property
    def degree(self) -> int | None:
        """Internal degree, None for the zero element."""
        for p, shift in zip(self.components, self.shifts, strict=True):
            if p:
                return sum(next(iter(p.itermonoms()))) + shift
        return None

    def check_homogeneous(self) -> None:
        degrees = {
            sum(m) + shift
            for p, shift in zip(self.components, self.shifts, strict=True)
            for m in p.itermonoms()
        }
        if len(degrees) > 1:
            raise UsageError(f"inhomogeneous module element, degrees {sorted(degrees)}")

    def leading_term(self) -> LeadingTerm:
        """Leading (component, monomial, coefficient) of a nonzero homogeneous element."""
        for i, p in enumerate(self.components):
            if p:
                monomial, coeff = p.LT
                return i, monomial, coeff
        raise InvariantViolation("zero element has no leading term")

    # ------------------------------------------------------------ arithmetic

    def _same_module(self, other: "FreeElement") -> None:
        if self.shifts != other.shifts or self.ring != other.ring:
            raise UsageError("elements of different free modules")

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._same_module(other)
        return FreeElement(
            self.ring,
            self.shifts,
            tuple(a + b for a, b in zip(self.components, other.components, strict=True)),
        )

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        self._same_module(other)
        return FreeElement(
            self.ring,
            self.shifts,
            tuple(a - b for a, b in zip(self.components, other.components, strict=True)),
        )

    def __neg__(self) -> "FreeElement":
        return FreeElement(self.ring, self.shifts, tuple(-a for a in self.components))

    def mul_term(self, monomial: Monomial, coeff: object) -> "FreeElement":
        term = (monomial, coeff)
        return FreeElement(
            self.ring, self.shifts, tuple(p.mul_term(term) for p in self.components)
        )

    def scale(self, coeff: object) -> "FreeElement":
        return FreeElement(self.ring, self.shifts, tuple(p.mul_ground(coeff) for p in self.components))

    def monic(self) -> "FreeElement":
        _, _, lc = self.leading_term()
        return self.scale(self.ring.domain.revert(lc))

    def without_term(self, component: int, monomial: Monomial) -> "FreeElement":
        parts = list(self.components)
        trimmed = parts[component].copy()
        del trimmed[monomial]
        parts[component] = trimmed
        return FreeElement(self.ring, self.shifts, tuple(parts))

    def equals(self, other: "FreeElement") -> bool:
        return self.shifts == other.shifts and all(
            a == b for a, b in zip(self.components, other.components, strict=True)
        )

    def sort_key(self, order: ModuleOrder) -> tuple[object, ...]:
        component, monomial, _ = self.leading_term()
        return order.key(component, monomial)


def default_order(ring: PolyRing, shifts: Sequence[int]) -> ModuleOrder:
    return ModuleOrder(tuple(shifts), MonomialOrder(ring.ngens))


@dataclass(frozen=True, eq=False)
class GradedMap:
    """Degree-preserving map between shifted free modules.

    Entry (i, j) is zero or homogeneous of degree source_shifts[j] - target_shifts[i].
    """

    ring: PolyRing
    source_shifts: tuple[int, ...]
    target_shifts: tuple[int, ...]
    entries: tuple[tuple[Polynomial, ...], ...]
    _columns: list[FreeElement] = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.target_shifts):
            raise UsageError("row count differs from target rank")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.source_shifts):
                raise UsageError("column count differs from source rank")
            for j, entry in enumerate(row):
                expected = self.source_shifts[j] - self.target_shifts[i]
                for monomial in entry.itermonoms():
                    if sum(monomial) != expected:
                        raise UsageError(
                            f"entry ({i + 1},{j + 1}) must be homogeneous of degree {expected}"
                        )

    @classmethod
    def from_columns(
        cls,
        ring: PolyRing,
        target_shifts: Sequence[int],
        columns: Sequence[FreeElement],
        source_shifts: Sequence[int] | None = None,
    ) -> "GradedMap":
        """Map sending basis vector j to ``columns[j]``.

        ``source_shifts`` is required when a column is zero.
        """
        if source_shifts is None:
            degrees = [c.degree for c in columns]
            if any(d is None for d in degrees):
                raise UsageError("zero column needs an explicit source shift")
            source_shifts = [int(d) for d in degrees]  # type: ignore[arg-type]
        rows = tuple(
            tuple(column.components[i] for column in columns) for i in range(len(target_shifts))
        )
        return cls(ring, tuple(source_shifts), tuple(target_shifts), rows)

    @classmethod
    def identity(cls, ring: PolyRing, shifts: Sequence[int]) -> "GradedMap":
        k = len(shifts)
        rows = tuple(
            tuple(ring.one if i == j else ring.zero for j in range(k)) for i in range(k)
        )
        return cls(ring, tuple(shifts), tuple(shifts), rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target_shifts), len(self.source_shifts)

    def columns(self) -> list[FreeElement]:
        if not self._columns:
            self._columns.extend(
                FreeElement(
                    self.ring,
                    self.target_shifts,
                    tuple(row[j] for row in self.entries),
                )
                for j in range(len(self.source_shifts))
            )
        return list(self._columns)

    def apply(self, v: FreeElement) -> FreeElement:
        if v.shifts != self.source_shifts:
            raise UsageError("vector does not live in the source module")
        parts = []
        for row in self.entries:
            total = self.ring.zero
            for entry, coordinate in zip(row, v.components, strict=True):
                if entry and coordinate:
                    total += entry * coordinate
            parts.append(total)
        return FreeElement(self.ring, self.target_shifts, tuple(parts))

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """``self`` after ``inner``."""
        if inner.target_shifts != self.source_shifts:
            raise UsageError("maps are not composable")
        columns = [self.apply(c) for c in inner.columns()]
        return GradedMap.from_columns(
            self.ring, self.target_shifts, columns, source_shifts=inner.source_shifts
        )

    def is_zero(self) -> bool:
        return not any(entry for row in self.entries for entry in row)

    def constant_entries(self) -> list[tuple[int, int]]:
        """Positions of nonzero constant entries (unit entries)."""
        return [
            (i, j)
            for i, row in enumerate(self.entries)
            for j, entry in enumerate(row)
            if entry and entry.is_ground
        ]
