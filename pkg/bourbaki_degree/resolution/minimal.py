"""Minimal graded free resolutions by iterated kernels."""

from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from sympy.polys.rings import PolyRing

from bourbaki_degree.core.errors import InvariantViolation, ResolutionError
from bourbaki_degree.groebner.buchberger import kernel, minimal_generator_indices
from bourbaki_degree.groebner.modules import FreeElement, GradedMap
from bourbaki_degree.observability.logging import get_logger
from bourbaki_degree.observability.tracing import traced
from bourbaki_degree.resolution.betti import BettiTable

logger = get_logger(__name__)


@dataclass(frozen=True)
class Resolution:
    """F_pd -> ... -> F_1 -> F_0; ``differentials[i]`` maps F_{i+1} to F_i."""

    presentation: GradedMap
    free_modules: tuple[tuple[int, ...], ...]
    differentials: tuple[GradedMap, ...]
    betti: BettiTable

    @property
    def projective_dimension(self) -> int:
        return self.betti.projective_dimension


def eliminate_units(gmap: GradedMap) -> GradedMap:
    """Cancel nonzero constant entries by row and column operations.

    Pivoting on a constant entry (i, j) removes row i and column j and replaces
    every other entry by e[k][l] - e[k][j] * e[i][l] / c, which keeps the grading.
    """
    ring = gmap.ring
    entries = [list(row) for row in gmap.entries]
    targets = list(gmap.target_shifts)
    sources = list(gmap.source_shifts)
    while True:
        pivot = next(
            (
                (i, j)
                for i, row in enumerate(entries)
                for j, entry in enumerate(row)
                if entry and entry.is_ground
            ),
            None,
        )
        if pivot is None:
            break
        i, j = pivot
        inverse = ring.domain.revert(entries[i][j].LC)
        pivot_row = entries[i]
        updated = []
        for k, row in enumerate(entries):
            if k == i:
                continue
            factor = row[j]
            new_row = []
            for col, entry in enumerate(row):
                if col == j:
                    continue
                if factor and pivot_row[col]:
                    entry = entry - (factor * pivot_row[col]).mul_ground(inverse)
                new_row.append(entry)
            updated.append(new_row)
        entries = updated
        del targets[i]
        del sources[j]
    return GradedMap(
        ring, tuple(sources), tuple(targets), tuple(tuple(row) for row in entries)
    )


def prune_columns(gmap: GradedMap) -> GradedMap:
    """Keep a minimal generating subset of the columns."""
    columns = gmap.columns()
    keep = minimal_generator_indices(columns)
    return GradedMap.from_columns(
        gmap.ring,
        gmap.target_shifts,
        [columns[j] for j in keep],
        source_shifts=[gmap.source_shifts[j] for j in keep],
    )


def minimalize_presentation(gmap: GradedMap) -> GradedMap:
    return prune_columns(eliminate_units(gmap))


def _iterate_kernels(first: GradedMap, max_length: int, offset: int) -> list[GradedMap]:
    maps: list[GradedMap] = []
    current = first
    while True:
        syzygies = kernel(current)
        keep = minimal_generator_indices(syzygies)
        if not keep:
            return maps
        nxt = GradedMap.from_columns(
            current.ring, current.source_shifts, [syzygies[k] for k in keep]
        )
        if nxt.constant_entries():
            raise InvariantViolation("non-minimal differential: constant entry after pruning")
        maps.append(nxt)
        if offset + len(maps) > max_length:
            raise ResolutionError(
                f"no exactness after {max_length} steps; the syzygy theorem rules this out"
            )
        current = nxt


@traced("resolution.minimal_resolution")
def minimal_resolution(presentation: GradedMap, max_length: int | None = None) -> Resolution:
    """Minimal graded free resolution of coker(presentation)."""
    max_length = presentation.ring.ngens if max_length is None else max_length
    pruned = minimalize_presentation(presentation)
    differentials: list[GradedMap] = []
    if pruned.target_shifts and pruned.source_shifts:
        differentials = [pruned]
        if max_length < 1:
            raise ResolutionError("presentation needs at least one step")
        differentials += _iterate_kernels(pruned, max_length, 1)
    modules = [pruned.target_shifts] + [d.source_shifts for d in differentials]
    resolution = Resolution(
        presentation=presentation,
        free_modules=tuple(modules),
        differentials=tuple(differentials),
        betti=BettiTable.from_shifts(modules),
    )
    logger.debug(
        "minimal_resolution",
        length=resolution.projective_dimension,
        ranks=[len(m) for m in modules],
    )
    return resolution


def resolve_submodule(
    ring: PolyRing,
    ambient: Sequence[int],
    generators: Sequence[FreeElement],
    max_length: int | None = None,
) -> Resolution:
    """Minimal resolution of the submodule spanned by ``generators``."""
    max_length = ring.ngens if max_length is None else max_length
    keep = minimal_generator_indices(generators)
    inclusion = GradedMap.from_columns(ring, ambient, [generators[k] for k in keep])
    modules: list[tuple[int, ...]] = []
    differentials: list[GradedMap] = []
    if keep:
        differentials = _iterate_kernels(inclusion, max_length, 0)
        modules = [inclusion.source_shifts] + [d.source_shifts for d in differentials]
    return Resolution(
        presentation=inclusion,
        free_modules=tuple(modules),
        differentials=tuple(differentials),
        betti=BettiTable.from_shifts(modules),
    )


def depth_and_pd(res: Resolution, n: int) -> tuple[int, int]:
    """(pd, depth) by Auslander-Buchsbaum; the zero module reports (-1, n + 1)."""
    pd = res.projective_dimension
    if pd < 0:
        return -1, n + 1
    return pd, n - pd


def composites_vanish(res: Resolution) -> bool:
    """Consecutive differentials multiply to zero."""
    return all(
        outer.compose(inner).is_zero()
        for outer, inner in zip(res.differentials, res.differentials[1:])
    )


def euler_characteristic(res: Resolution, degree: int, n: int) -> int:
    """Alternating sum of the graded-piece dimensions of the free modules."""
    total = 0
    for i, shifts in enumerate(res.free_modules):
        dims = sum(comb(degree - a + n - 1, n - 1) for a in shifts if degree >= a)
        total += (-1) ** i * dims
    return total
