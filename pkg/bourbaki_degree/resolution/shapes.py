"""Parametric resolution shapes of coker(Theta) and the matcher against them.

All degrees are absolute: F_0 = R(d1) + R(d2) has generators in degrees -d1, -d2.
"""

from bourbaki_degree.core.models import ShapeTag
from bourbaki_degree.resolution.betti import BettiTable


def buchsbaum_rim_table(d1: int, d2: int) -> BettiTable:
    """0 -> R(-2d1-d2) + R(-d1-2d2) -> R^4(-d) -> R^4 -> R(d1) + R(d2)."""
    d = d1 + d2
    return BettiTable.from_shifts([(-d1, -d2), (0, 0, 0, 0), (d,) * 4, (d + d1, d + d2)])


def free_table(d1: int, d2: int, e: int, e0: int) -> BettiTable:
    """Syz(Theta) = R(-e) + R(s) with s = e - d + e0."""
    s = e - (d1 + d2) + e0
    return BettiTable.from_shifts([(-d1, -d2), (0, 0, 0, 0), (e, -s)])


def nearly_free_table(d1: int, d2: int, e: int, e0: int) -> BettiTable:
    """Syz(Theta) resolved by 0 -> R(s-2) -> R(s-1)^2 + R(-e), with s = e - d + e0."""
    s = e - (d1 + d2) + e0
    return BettiTable.from_shifts(
        [(-d1, -d2), (0, 0, 0, 0), (e, 1 - s, 1 - s), (2 - s,)]
    )


def expected_shape(tag: ShapeTag, d1: int, d2: int, e: int, e0: int) -> BettiTable | None:
    """Predicted Betti table for a named shape; None when the shape has no single table."""
    if tag == ShapeTag.BUCHSBAUM_RIM:
        return buchsbaum_rim_table(d1, d2)
    if tag == ShapeTag.FREE:
        return free_table(d1, d2, e, e0)
    if tag == ShapeTag.NEARLY_FREE:
        return nearly_free_table(d1, d2, e, e0)
    return None


def _is_buchsbaum_rim(b: BettiTable, d1: int, d2: int) -> bool:
    return b.entries == buchsbaum_rim_table(d1, d2).entries


def _is_nearly_free(b: BettiTable, d1: int, d2: int, e: int, e0: int) -> bool:
    return b.entries == nearly_free_table(d1, d2, e, e0).entries


def shape_match(b: BettiTable, d1: int, d2: int, e: int, e0: int) -> ShapeTag:
    """Name the shape of the minimal resolution of coker(Theta).

    ``e`` and ``e0`` fix the nearly free table; the other shapes depend on d1, d2 only.
    """
    pd = b.projective_dimension
    if 0 <= pd <= 2:
        return ShapeTag.FREE
    if _is_buchsbaum_rim(b, d1, d2):
        return ShapeTag.BUCHSBAUM_RIM
    if _is_nearly_free(b, d1, d2, e, e0):
        return ShapeTag.NEARLY_FREE
    if pd == 3 and b.total(2) == 3:
        return ShapeTag.THREE_SYZYGY
    return ShapeTag.OTHER
