"""Validated 2x4 matrices Theta of forms."""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from sympy.polys.rings import PolyRing

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.algebra.grammar import parse_poly, render_poly
from bourbaki_degree.algebra.polynomials import (
    Polynomial,
    check_same_ring,
    degree,
    is_homogeneous,
    polynomial_ring,
)
from bourbaki_degree.core.errors import ThetaValidationError, UsageError
from bourbaki_degree.groebner.modules import GradedMap
from bourbaki_degree.hilbert.monomial import ideal_height

Entry = str | Polynomial


@dataclass(frozen=True, eq=False)
class ThetaMatrix:
    """Rows f (degree d1) and g (degree d2) with d1 <= d2."""

    n: int
    field: FieldSpec
    rows: tuple[tuple[Polynomial, ...], tuple[Polynomial, ...]]
    d1: int
    d2: int
    swapped: bool = False

    @property
    def ring(self) -> PolyRing:
        return polynomial_ring(self.n, self.field)

    @property
    def d(self) -> int:
        return self.d1 + self.d2

    @property
    def f(self) -> tuple[Polynomial, ...]:
        return self.rows[0]

    @property
    def g(self) -> tuple[Polynomial, ...]:
        return self.rows[1]

    def graded_map(self) -> GradedMap:
        """R^4 -> R(d1) + R(d2)."""
        return GradedMap(self.ring, (0, 0, 0, 0), (-self.d1, -self.d2), self.rows)

    def row_map(self, index: int) -> GradedMap:
        """R^4 -> R(d_index) given by one row."""
        shift = self.d1 if index == 0 else self.d2
        return GradedMap(self.ring, (0, 0, 0, 0), (-shift,), (self.rows[index],))

    def minor(self, i: int, j: int) -> Polynomial:
        return self.f[i] * self.g[j] - self.f[j] * self.g[i]

    def minors(self) -> list[Polynomial]:
        return [self.minor(i, j) for i, j in combinations(range(4), 2)]

    def rendered(self) -> list[list[str]]:
        return [[render_poly(p) for p in row] for row in self.rows]


def _row_degree(row: Sequence[Polynomial]) -> int | None:
    """Common degree of the nonzero entries; None when they disagree or a form is inhomogeneous."""
    degrees = set()
    for p in row:
        if not p:
            continue
        if not is_homogeneous(p):
            return None
        degrees.add(degree(p))
    return degrees.pop() if len(degrees) == 1 else None


def coerce_entries(
    entries: Sequence[Sequence[Entry]], n: int, field: FieldSpec
) -> list[list[Polynomial]]:
    """Parse strings and move polynomials into k[x1..xn]."""
    ring = polynomial_ring(n, field)
    out = []
    for row in entries:
        parsed = []
        for entry in row:
            if isinstance(entry, str):
                parsed.append(parse_poly(entry, n, field))
            else:
                check_same_ring(ring.zero, entry)
                parsed.append(entry)
        out.append(parsed)
    return out


def validate(entries: Sequence[Sequence[Entry]], n: int, field: FieldSpec | str = "QQ") -> ThetaMatrix:
    """Check the standing hypotheses and return the matrix with d1 <= d2.

    Raises:
        PolynomialParseError: an entry does not parse.
        UsageError: the shape is not 2x4 or rings are mixed.
        ThetaValidationError: listing every violated hypothesis by name.
    """
    field = FieldSpec.parse(field)
    if len(entries) != 2 or any(len(row) != 4 for row in entries):
        raise UsageError("Theta must be a 2x4 matrix")
    rows = coerce_entries(entries, n, field)

    violations: list[str] = []
    details: dict[str, str] = {}
    degrees: list[int] = []
    for label, row in zip("fg", rows, strict=True):
        if not any(row):
            violations.append("zero_row")
            details[f"zero_row_{label}"] = f"row {label} vanishes"
            continue
        row_degree = _row_degree(row)
        if row_degree is None:
            violations.append("inhomogeneous_row")
            details[f"inhomogeneous_row_{label}"] = f"row {label} entries are not forms of one degree"
            continue
        degrees.append(row_degree)

    if not violations:
        candidate = ThetaMatrix(n, field, (tuple(rows[0]), tuple(rows[1])), degrees[0], degrees[1])
        if not any(candidate.minors()):
            violations.append("rank")
            details["rank"] = "all 2-minors vanish"
        for label, row in zip("fg", rows, strict=True):
            height = ideal_height(row)
            if height < 2:
                violations.append("row_height")
                details[f"row_height_{label}"] = f"row {label} generates an ideal of height {height}"

    if violations:
        raise ThetaValidationError(sorted(set(violations)), details)

    d1, d2 = degrees
    swapped = d1 > d2
    if swapped:
        rows.reverse()
        d1, d2 = d2, d1
    return ThetaMatrix(n, field, (tuple(rows[0]), tuple(rows[1])), d1, d2, swapped)
