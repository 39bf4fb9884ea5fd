"""Content sequences and the diagonal labelling of cells."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .errors import CellOutOfShape, NotAContentSequence
from .partitions import FrobeniusCoords, Partition, from_frobenius

__all__ = [
    "ContentSequence",
    "content_sequence",
    "partition_from_content_sequence",
    "is_shifted_form",
    "diagonal_label",
    "cell_of_label",
    "label_of_cell",
]


@dataclass(frozen=True)
class ContentSequence:
    """Box counts per content, stored as sorted ``(content, count)`` pairs.

    Contents absent from ``counts`` have count zero.
    """

    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        items = self.counts.items() if isinstance(self.counts, Mapping) else self.counts
        clean = tuple(sorted((int(a), int(x)) for a, x in items if x != 0))
        if len({a for a, _ in clean}) != len(clean):
            raise NotAContentSequence("repeated content index")
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_list(cls, values, origin: int) -> "ContentSequence":
        """Build from a finite window; ``values[origin]`` sits at content 0."""
        return cls(tuple((i - origin, x) for i, x in enumerate(values)))

    def __getitem__(self, a: int) -> int:
        return dict(self.counts).get(a, 0)

    @property
    def peak(self) -> int:
        return self[0]

    @property
    def support(self) -> tuple[int, int]:
        if not self.counts:
            return (0, 0)
        return (min(self.counts[0][0], 0), max(self.counts[-1][0], 0))

    def window(self) -> list[int]:
        lo, hi = self.support
        return [self[a] for a in range(lo, hi + 1)]

    def shifted(self, m: int) -> "ContentSequence":
        """The sequence y with y[a] = self[a - m]."""
        return ContentSequence(tuple((a + m, x) for a, x in self.counts))

    def validate(self) -> None:
        if any(x < 0 for _, x in self.counts):
            raise NotAContentSequence("negative count")
        lo, hi = self.support
        for a in range(lo, 0):
            if self[a] > self[a + 1]:
                raise NotAContentSequence(f"not weakly increasing up to the origin at {a}")
        for a in range(0, hi):
            if self[a] < self[a + 1]:
                raise NotAContentSequence(f"not weakly decreasing after the origin at {a}")
        left = {self[a] for a in range(lo, 0)}
        right = {self[a] for a in range(1, hi + 1)}
        for v in range(1, self.peak):
            if v not in left or v not in right:
                raise NotAContentSequence(f"value {v} missing on one side of the peak")

    def __str__(self) -> str:
        lo, hi = self.support
        return "(" + ",".join(f"_{self[a]}_" if a == 0 else str(self[a]) for a in range(lo, hi + 1)) + ")"

    def to_json(self) -> dict:
        return {"counts": [[a, x] for a, x in self.counts], "peak_at": 0}


def content_sequence(lam: Partition) -> ContentSequence:
    return ContentSequence(tuple(Counter(lam.contents()).items()))


def partition_from_content_sequence(seq: ContentSequence) -> Partition:
    seq.validate()
    r = seq.peak
    _, hi = seq.support
    lo, _ = seq.support
    # alpha_i counts the positive contents whose diagonal reaches depth i
    alpha = tuple(sum(1 for a in range(1, hi + 1) if seq[a] >= i) for i in range(1, r + 1))
    beta = tuple(sum(1 for a in range(lo, 0) if seq[a] >= i) for i in range(1, r + 1))
    return from_frobenius(FrobeniusCoords(alpha, beta))


def is_shifted_form(lam: Partition, m: int) -> bool:
    """True iff the content sequence is symmetric about m/2, i.e. lam = (alpha+m | alpha)."""
    seq = content_sequence(lam)
    keys = {a for a, _ in seq.counts} | {m - a for a, _ in seq.counts}
    return all(seq[a] == seq[m - a] for a in keys)


def cell_of_label(lam: Partition, i: int, a: int) -> tuple[int, int]:
    """The i-th cell (from the top) on the diagonal of content a."""
    cell = (i + max(0, -a), i + max(0, a))
    if i < 1 or cell not in lam:
        raise CellOutOfShape(f"label ({i},{a}) is not in {lam}")
    return cell


def label_of_cell(lam: Partition, cell: tuple[int, int]) -> tuple[int, int]:
    row, col = cell
    if cell not in lam:
        raise CellOutOfShape(f"cell {cell} is not in {lam}")
    return (min(row, col), col - row)


def diagonal_label(lam: Partition) -> dict[tuple[int, int], tuple[int, int]]:
    """Map each cell ``(row, col)`` to its diagonal label ``(i, content)``."""
    return {cell: label_of_cell(lam, cell) for cell in lam.cells()}
