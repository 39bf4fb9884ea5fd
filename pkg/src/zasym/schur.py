"""Semistandard tableaux, Schur polynomials and their specializations.

Closed forms (hook-content, q-hook-content) live next to the brute-force
tableau sums they are checked against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import EnumerationTooLarge, InexactDivision, LengthExceedsN, RepeatedPoint
from .partitions import Partition, k_statistic
from .polynomials import LaurentPolynomial, TruncatedMultiPolynomial, bareiss_det, q_integer

__all__ = [
    "SSYT",
    "enumerate_ssyt",
    "ssyt_count",
    "dim_hook_content",
    "schur_truncated",
    "schur_ssyt_eval",
    "schur_bialternant_eval",
    "principal_specialization",
    "principal_specialization_ssyt",
    "stepped_specialization",
]

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class SSYT:
    """Rows weakly increase, columns strictly increase, entries in 1..n."""

    shape: Partition
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(map(len, rows)) != self.shape.parts:
            raise ValueError("rows do not match shape")
        for i, r in enumerate(rows):
            if any(not 1 <= v <= self.n for v in r):
                raise ValueError(f"entry out of 1..{self.n}")
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError("row not weakly increasing")
            if i and any(rows[i - 1][j] >= v for j, v in enumerate(r)):
                raise ValueError("column not strictly increasing")

    def weight(self) -> tuple[int, ...]:
        c = Counter(v for r in self.rows for v in r)
        return tuple(c[i] for i in range(1, self.n + 1))

    def grid(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "n": self.n, "rows": [list(r) for r in self.rows]}


def dim_hook_content(shape: Partition, n: int) -> int:
    """Number of SSYT of the shape with entries at most n."""
    if shape.length > n:
        raise LengthExceedsN(f"{shape} has length {shape.length} > {n}")
    num = prod(n + c for c in shape.contents())
    den = prod(shape.hooks())
    value, rem = divmod(num, den)
    if rem:
        raise InexactDivision(f"hook-content quotient for {shape}, n={n} is not integral")
    return value


def _fillings(shape: Partition, n: int, cap: int):
    if shape.length > n:
        return np.zeros((0, shape.weight), dtype=np.int64)
    size = dim_hook_content(shape, n)
    if size > cap:
        raise EnumerationTooLarge(size, cap)
    return _kernels.ssyt_fillings(shape.parts, n)


def enumerate_ssyt(shape: Partition, n: int, cap: int = DEFAULT_CAP) -> Iterator[SSYT]:
    for row in _fillings(shape, n, cap).tolist():
        it = iter(row)
        yield SSYT(shape, n, tuple(tuple(next(it) for _ in range(p)) for p in shape.parts))


def ssyt_count(shape: Partition, n: int) -> int:
    """Count by walking the tableaux; independent of the hook-content product."""
    if shape.length > n:
        return 0
    return int(_kernels.ssyt_norm_histogram(shape.parts, n).sum())


def _weights(fill: np.ndarray, n: int) -> np.ndarray:
    m = fill.shape[0]
    if fill.shape[1] == 0:
        return np.zeros((m, n), dtype=np.int64)
    flat = (fill - 1) + n * np.arange(m, dtype=np.int64)[:, None]
    return np.bincount(flat.ravel(), minlength=m * n).reshape(m, n)


def schur_truncated(shape: Partition, n: int, D: int, cap: int = DEFAULT_CAP) -> TruncatedMultiPolynomial:
    """s_shape(x_1..x_n) as a sum of tableau monomials, truncated at degree D."""
    if shape.weight > D or shape.length > n:
        return TruncatedMultiPolynomial(n, D)
    w = _weights(_fillings(shape, n, cap), n)
    return TruncatedMultiPolynomial(n, D, Counter(map(tuple, w.tolist())))


def schur_ssyt_eval(shape: Partition, points: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    n = len(points)
    if shape.length > n:
        return 0
    w = _weights(_fillings(shape, n, cap), n)
    total = 0
    for row in w.tolist():
        total += prod(x**k for x, k in zip(points, row))
    return total


def schur_bialternant_eval(shape: Partition, points: Sequence[int]) -> Fraction:
    """det(x_i^(lambda_j + n - j)) / det(x_i^(n - j)) in exact arithmetic."""
    pts = [int(x) for x in points]
    n = len(pts)
    if len(set(pts)) != n:
        raise RepeatedPoint(f"points {pts} are not distinct")
    if shape.length > n:
        return Fraction(0)
    num = bareiss_det([[x ** (shape.part(j) + n - j) for j in range(1, n + 1)] for x in pts])
    den = bareiss_det([[x ** (n - j) for j in range(1, n + 1)] for x in pts])
    vandermonde = prod(pts[i] - pts[j] for i in range(n) for j in range(i + 1, n))
    assert den == vandermonde, (den, vandermonde)
    return Fraction(num, den)


def principal_specialization(shape: Partition, n: int) -> LaurentPolynomial:
    """s(1, q, ..., q^(n-1)) from the q-analogue of the hook-content formula."""
    if shape.length > n:
        return LaurentPolynomial()
    num = LaurentPolynomial.constant(1)
    for c in shape.contents():
        num = num * q_integer(n + c)
    den = LaurentPolynomial.constant(1)
    for h in shape.hooks():
        den = den * q_integer(h)
    return num.exact_div(den).shift(k_statistic(shape))


def principal_specialization_ssyt(shape: Partition, n: int) -> LaurentPolynomial:
    """Same value, substituting x_i = q^(i-1) into the tableau sum."""
    if shape.length > n:
        return LaurentPolynomial()
    return LaurentPolynomial.from_histogram(_kernels.ssyt_norm_histogram(shape.parts, n))


def stepped_specialization(
    shape: Partition, start: int, count: int, step: int = 2, route: str = "ssyt"
) -> LaurentPolynomial:
    """s(q^start, q^(start+step), ..., q^(start+(count-1)*step)).

    ``route="ssyt"`` substitutes into the tableau sum; ``route="closed"``
    uses q^(start*|shape|) times the principal specialization in q^step.
    """
    if shape.length > count:
        return LaurentPolynomial()
    if route == "ssyt":
        hist = _kernels.ssyt_norm_histogram(shape.parts, count)
        return LaurentPolynomial((start * shape.weight + step * k, int(v)) for k, v in enumerate(hist))
    if route == "closed":
        return principal_specialization(shape, count).substitute(step).shift(start * shape.weight)
    raise ValueError(f"unknown route {route!r}")
