"""Integer partitions, Frobenius coordinates and per-cell statistics.

Cells are addressed 1-based as ``(row, col)``.  Arm and leg are *counts*:
``arm = lambda_row - col`` cells strictly to the right and
``leg = lambda'_col - row`` cells strictly below, so that
``hook = arm + leg + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import LengthMismatch, NegativePart, NonStrictCoordinates, NotWeaklyDecreasing

__all__ = [
    "Partition",
    "FrobeniusCoords",
    "CellStats",
    "make_partition",
    "conjugate",
    "rank",
    "frobenius",
    "from_frobenius",
    "add_scalar",
    "is_z_asymmetric",
    "cell_stats",
    "k_statistic",
    "content_sum",
    "enumerate_partitions",
    "enumerate_strict",
    "enumerate_z_asymmetric",
    "parse_parts",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 0:
                raise NegativePart(f"negative part in {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def part(self, i: int) -> int:
        """1-based part lookup; zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    @property
    def rank(self) -> int:
        r = 0
        while r < len(self.parts) and self.parts[r] >= r + 1:
            r += 1
        return r

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells in row-major order."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and j >= 1 and self.part(i) >= j

    def contents(self) -> list[int]:
        return [j - i for i, j in self.cells()]

    def hooks(self) -> list[int]:
        conj = self.conjugate
        return [self.part(i) - j + conj.part(j) - i + 1 for i, j in self.cells()]

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class FrobeniusCoords:
    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()

    def __post_init__(self):
        alpha = tuple(int(a) for a in self.alpha)
        beta = tuple(int(b) for b in self.beta)
        if len(alpha) != len(beta):
            raise LengthMismatch(f"alpha {alpha} and beta {beta} differ in length")
        for seq in (alpha, beta):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise NonStrictCoordinates(f"{seq} is not a strict partition")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def rank(self) -> int:
        return len(self.alpha)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.alpha)) + "|" + ",".join(map(str, self.beta)) + ")"

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}


@dataclass(frozen=True)
class CellStats:
    row: int
    col: int
    content: int
    hook: int
    arm: int
    leg: int

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "col": self.col,
            "content": self.content,
            "hook": self.hook,
            "arm": self.arm,
            "leg": self.leg,
        }


def make_partition(parts: Sequence[int] = ()) -> Partition:
    return Partition(tuple(parts))


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse ``"4,2,2,1"``; the empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.split(","))


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate


def rank(lam: Partition) -> int:
    return lam.rank


def frobenius(lam: Partition) -> FrobeniusCoords:
    conj = lam.conjugate
    r = lam.rank
    return FrobeniusCoords(
        tuple(lam.part(i) - i for i in range(1, r + 1)),
        tuple(conj.part(j) - j for j in range(1, r + 1)),
    )


def from_frobenius(coords: FrobeniusCoords | tuple) -> Partition:
    if not isinstance(coords, FrobeniusCoords):
        coords = FrobeniusCoords(*coords)
    alpha, beta = coords.alpha, coords.beta
    r = len(alpha)
    rows = [alpha[i - 1] + i for i in range(1, r + 1)]
    # rows below the Durfee square are read off the column lengths beta_j + j
    col_lengths = [beta[j - 1] + j for j in range(1, r + 1)]
    depth = col_lengths[0] if r else 0
    for i in range(r + 1, depth + 1):
        rows.append(sum(1 for c in col_lengths if c >= i))
    return Partition(tuple(rows))


def add_scalar(a: int, lam: Partition) -> Partition:
    return Partition(tuple(a + p for p in lam.parts))


def is_z_asymmetric(lam: Partition, z: int) -> bool:
    f = frobenius(lam)
    return all(b == a + z for a, b in zip(f.alpha, f.beta))


def cell_stats(lam: Partition) -> list[CellStats]:
    conj = lam.conjugate
    out = []
    for i, j in lam.cells():
        arm = lam.part(i) - j
        leg = conj.part(j) - i
        out.append(CellStats(i, j, j - i, arm + leg + 1, arm, leg))
    return out


def k_statistic(lam: Partition) -> int:
    by_rows = sum(i * p for i, p in enumerate(lam.parts))
    by_cols = sum(c * (c - 1) // 2 for c in lam.conjugate.parts)
    assert by_rows == by_cols, (lam, by_rows, by_cols)
    return by_rows


def content_sum(lam: Partition) -> int:
    total = sum(lam.contents())
    assert total == k_statistic(lam.conjugate) - k_statistic(lam), lam
    return total


def enumerate_partitions(weight: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``weight`` in decreasing lexicographic order."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    limit = weight if max_length is None else max_length
    out: list[Partition] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if len(prefix) == limit:
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(weight, weight, [])
    return out


def enumerate_strict(total: int, length: int, minimum: int = 0) -> list[tuple[int, ...]]:
    """Strictly decreasing tuples of ``length`` integers >= ``minimum`` summing to ``total``."""
    out = []

    def rec(remaining, slots, upper, prefix):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # the tail after p is at least minimum, minimum+1, ..., minimum+slots-2
        tail = (slots - 1) * minimum + (slots - 1) * (slots - 2) // 2
        for p in range(min(upper, remaining - tail), minimum + slots - 2, -1):
            prefix.append(p)
            rec(remaining - p, slots - 1, p - 1, prefix)
            prefix.pop()

    rec(total, length, total, [])
    return out


def enumerate_z_asymmetric(weight: int, z: int) -> list[Partition]:
    """z-asymmetric partitions of ``weight``, built from strict alpha directly.

    A rank-r shape (alpha | alpha+z) has weight sum(2*alpha_i + z + 1).
    """
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    floor = max(0, -z)
    found = []
    r = 0
    while r * (r + abs(z)) <= weight:
        rest = weight - r * (z + 1)
        if rest >= 0 and rest % 2 == 0:
            for alpha in enumerate_strict(rest // 2, r, floor):
                found.append(from_frobenius(FrobeniusCoords(alpha, tuple(a + z for a in alpha))))
        r += 1
    found.sort(reverse=True)
    return found
