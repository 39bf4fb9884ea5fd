"""Exact integer-coefficient polynomials.

``LaurentPolynomial`` is univariate in q with integer (possibly negative)
exponents.  ``TruncatedMultiPolynomial`` lives in Z[x_1..x_n] modulo all
monomials of total degree above a cap D.
"""

from __future__ import annotations

from itertools import product as _cartesian
from typing import Iterable, Mapping

from .errors import InexactDivision

__all__ = ["LaurentPolynomial", "TruncatedMultiPolynomial", "q_integer", "bareiss_det"]


class LaurentPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            c[int(e)] = c.get(int(e), 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def from_histogram(cls, counts, offset: int = 0) -> "LaurentPolynomial":
        """Coefficient of q^(offset+k) is counts[k]."""
        return cls((offset + k, int(v)) for k, v in enumerate(counts))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else None

    @property
    def low_degree(self) -> int:
        return min(self._c) if self._c else None

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = LaurentPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by q^k."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()})

    def substitute(self, k: int) -> "LaurentPolynomial":
        """Replace q by q^k."""
        return LaurentPolynomial({e * k: v for e, v in self._c.items()})

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial()
        # reduce to ordinary polynomials with nonzero constant terms
        s, t = self.low_degree, divisor.low_degree
        num = [0] * (self.degree - s + 1)
        for e, v in self._c.items():
            num[e - s] = v
        den = [0] * (divisor.degree - t + 1)
        for e, v in divisor._c.items():
            den[e - t] = v
        if len(den) > len(num):
            raise InexactDivision("divisor has larger span than dividend")
        lead = den[-1]
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = num[k + len(den) - 1]
            qk, rem = divmod(top, lead)
            if rem:
                raise InexactDivision("non-integral quotient coefficient")
            quot[k] = qk
            if qk:
                for j, d in enumerate(den):
                    num[k + j] -= qk * d
        if any(num):
            raise InexactDivision("nonzero remainder")
        return LaurentPolynomial((k + s - t, v) for k, v in enumerate(quot))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                parts.append(str(v))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(mono if v == 1 else f"-{mono}" if v == -1 else f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def to_json(self) -> list:
        return [[e, str(v)] for e, v in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPolynomial":
        return cls((int(e), int(v)) for e, v in data)


def q_integer(a: int) -> LaurentPolynomial:
    """[a] = 1 + q + ... + q^(a-1); [0] = 0."""
    if a < 0:
        raise ValueError("q-integer of a negative number")
    return LaurentPolynomial((e, 1) for e in range(a))


class TruncatedMultiPolynomial:
    """Polynomial in n variables with every term of total degree <= D."""

    __slots__ = ("n", "D", "_c")

    def __init__(self, n: int, D: int, terms: Mapping | Iterable = ()):
        self.n = n
        self.D = D
        items = terms.items() if isinstance(terms, Mapping) else terms
        c: dict[tuple[int, ...], int] = {}
        for exps, v in items:
            exps = tuple(int(x) for x in exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length for {n} variables")
            if sum(exps) > D:
                continue
            c[exps] = c.get(exps, 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def one(cls, n: int, D: int) -> "TruncatedMultiPolynomial":
        return cls(n, D, {(0,) * n: 1})

    @classmethod
    def variable(cls, n: int, D: int, i: int) -> "TruncatedMultiPolynomial":
        """x_i with i 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, D, {tuple(e): 1})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def _check(self, other):
        if (self.n, self.D) != (other.n, other.D):
            raise ValueError("ring mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedMultiPolynomial):
            return NotImplemented
        return (self.n, self.D, self._c) == (other.n, other.D, other._c)

    def __add__(self, other):
        self._check(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return TruncatedMultiPolynomial(self.n, self.D, out)

    def __neg__(self):
        return TruncatedMultiPolynomial(self.n, self.D, {e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "TruncatedMultiPolynomial":
        return TruncatedMultiPolynomial(self.n, self.D, {e: v * k for e, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, v1 in self._c.items():
            d1 = sum(e1)
            for e2, v2 in other._c.items():
                if d1 + sum(e2) > self.D:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + v1 * v2
        return TruncatedMultiPolynomial(self.n, self.D, out)

    __rmul__ = __mul__

    def homogeneous_part(self, d: int) -> "TruncatedMultiPolynomial":
        return TruncatedMultiPolynomial(self.n, self.D, {e: v for e, v in self._c.items() if sum(e) == d})

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._c}

    def permute(self, perm) -> "TruncatedMultiPolynomial":
        """Rename variable x_{perm[k]+1} to x_{k+1} (0-based ``perm``)."""
        return TruncatedMultiPolynomial(
            self.n, self.D, {tuple(e[p] for p in perm): v for e, v in self._c.items()}
        )

    def evaluate(self, point) -> int:
        total = 0
        for e, v in self._c.items():
            term = v
            for x, k in zip(point, e):
                term *= x**k
            total += term
        return total

    def first_difference(self, other) -> tuple[tuple[int, ...], int, int] | None:
        """Smallest monomial where the coefficients differ, if any."""
        self._check(other)
        for e in sorted(set(self._c) | set(other._c)):
            if self._c.get(e, 0) != other._c.get(e, 0):
                return e, self._c.get(e, 0), other._c.get(e, 0)
        return None

    def __repr__(self) -> str:
        return f"TruncatedMultiPolynomial(n={self.n}, D={self.D}, terms={len(self._c)})"

    def to_json(self) -> dict:
        return {"n": self.n, "D": self.D, "terms": [[list(e), str(v)] for e, v in sorted(self._c.items())]}

    @classmethod
    def monomials(cls, n: int, D: int):
        for e in _cartesian(range(D + 1), repeat=n):
            if sum(e) <= D:
                yield e


def bareiss_det(matrix) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
