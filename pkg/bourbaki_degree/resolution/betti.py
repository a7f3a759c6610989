"""Graded Betti tables."""

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from bourbaki_degree.core.models import BettiEntry


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j}: rank of the degree-j part of the i-th free module, absolute degrees."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_shifts(cls, shifts_per_step: Sequence[Sequence[int]]) -> "BettiTable":
        entries: dict[tuple[int, int], int] = {}
        for i, shifts in enumerate(shifts_per_step):
            for degree, rank in Counter(shifts).items():
                entries[(i, degree)] = rank
        return cls(entries)

    @classmethod
    def from_models(cls, rows: Iterable[BettiEntry]) -> "BettiTable":
        return cls({(r.i, r.degree): r.rank for r in rows})

    @property
    def length(self) -> int:
        """Largest homological index with a nonzero entry; -1 for the zero module."""
        return max((i for (i, _), r in self.entries.items() if r), default=-1)

    @property
    def projective_dimension(self) -> int:
        return self.length

    def total(self, i: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def degrees(self, i: int) -> list[int]:
        """Generator degrees of F_i with multiplicity, ascending."""
        out: list[int] = []
        for (k, degree), rank in sorted(self.entries.items()):
            if k == i:
                out.extend([degree] * rank)
        return out

    def rank_at(self, i: int, degree: int) -> int:
        return self.entries.get((i, degree), 0)

    def twisted(self, k: int) -> "BettiTable":
        """Table of M(-k): every degree moved up by ``k``."""
        return BettiTable({(i, j + k): r for (i, j), r in self.entries.items()})

    def truncated(self, start: int) -> "BettiTable":
        """Drop F_0..F_{start-1} and renumber."""
        return BettiTable(
            {(i - start, j): r for (i, j), r in self.entries.items() if i >= start}
        )

    def to_models(self) -> list[BettiEntry]:
        return [
            BettiEntry(i=i, degree=j, rank=r)
            for (i, j), r in sorted(self.entries.items())
            if r
        ]

    def render(self) -> str:
        """Chain ``0 -> R(-4) -> R^4(-3) -> ... -> F_0`` in absolute degrees."""
        if self.length < 0:
            return "0"
        pieces = ["0"]
        for i in range(self.length, -1, -1):
            summands = []
            for (k, degree), rank in sorted(self.entries.items(), key=lambda x: (x[0][0], -x[0][1])):
                if k != i or not rank:
                    continue
                twist = "" if degree == 0 else f"({-degree})"
                power = "" if rank == 1 else f"^{rank}"
                summands.append(f"R{power}{twist}")
            pieces.append(" + ".join(summands) if summands else "0")
        return " -> ".join(pieces)
