"""Weight enumerators, homogeneous bivariate polynomials, Krawtchouk numbers.

All arithmetic is exact: ``int`` for weight distributions, ``Fraction`` for
polynomial coefficients.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .exceptions import DomainError


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 when ``b < 0`` or ``b > a`` (and for ``a < 0``)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def krawtchouk(j: int, u: int, n: int) -> int:
    """Coefficient of x^(n-j) y^j in (x+y)^(n-u) (x-y)^u, by the direct alternating sum."""
    if not (0 <= j <= n and 0 <= u <= n):
        raise DomainError(f"krawtchouk arguments out of range: j={j}, u={u}, n={n}")
    return sum((-1) ** i * comb(u, i) * binom(n - u, j - i) for i in range(min(j, u) + 1))


def krawtchouk_recurrence(j: int, u: int, n: int) -> int:
    """Same values via the three-term recurrence in j; kept as a check on :func:`krawtchouk`."""
    if not (0 <= j <= n and 0 <= u <= n):
        raise DomainError(f"krawtchouk arguments out of range: j={j}, u={u}, n={n}")
    prev, cur = 1, n - 2 * u
    if j == 0:
        return prev
    for i in range(1, j):
        # (i+1) K_{i+1} = (n - 2u) K_i - (n - i + 1) K_{i-1}
        prev, cur = cur, ((n - 2 * u) * cur - (n - i + 1) * prev) // (i + 1)
    return cur


@lru_cache(maxsize=64)
def krawtchouk_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows indexed by j, columns by u."""
    return tuple(tuple(krawtchouk(j, u, n) for u in range(n + 1)) for j in range(n + 1))


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of sum A_i x^(n-i) y^i."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise DomainError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.coeffs) if a)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "WeightEnumerator":
        data = json.loads(text)
        if not isinstance(data, list) or not data:
            raise DomainError("enumerator JSON must be a non-empty array")
        return cls(len(data) - 1, tuple(int(str(v)) for v in data))


def macwilliams_transform(w: WeightEnumerator, k: int) -> WeightEnumerator:
    """Weight enumerator of the dual of an ``[n, k]`` code with enumerator ``w``."""
    n = w.n
    if not 0 <= k <= n:
        raise DomainError(f"dimension {k} outside 0..{n}")
    kmat = krawtchouk_matrix(n)
    out = []
    for j in range(n + 1):
        total = sum(a * kmat[j][u] for u, a in enumerate(w.coeffs) if a)
        q, r = divmod(total, 1 << k)
        if r:
            raise DomainError(f"not a valid [{n},{k}] enumerator: 2^{k} does not divide coefficient {j}")
        out.append(q)
    return WeightEnumerator(n, tuple(out))


def antipodal_check(w: WeightEnumerator) -> bool:
    return all(w.coeffs[i] == w.coeffs[w.n - i] for i in range(w.n + 1))


@dataclass(frozen=True)
class BivariatePoly:
    """Homogeneous polynomial sum c_j x^(degree-j) y^j with rational coefficients."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0 or len(self.coeffs) != self.degree + 1:
            raise DomainError("coefficient count must be degree + 1")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> "BivariatePoly":
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def monomial(cls, degree: int, j: int, c=1) -> "BivariatePoly":
        coeffs = [Fraction(0)] * (degree + 1)
        coeffs[j] = Fraction(c)
        return cls(degree, tuple(coeffs))

    @classmethod
    def linear(cls, a, b) -> "BivariatePoly":
        """a*x + b*y"""
        return cls(1, (Fraction(a), Fraction(b)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        if other.degree != self.degree:
            raise DomainError("cannot add homogeneous polynomials of different degree")
        return BivariatePoly(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BivariatePoly(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BivariatePoly":
        c = Fraction(c)
        return BivariatePoly(self.degree, tuple(c * v for v in self.coeffs))

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return BivariatePoly(self.degree + other.degree, tuple(out))

    def __pow__(self, e: int) -> "BivariatePoly":
        result = BivariatePoly(0, (Fraction(1),))
        for _ in range(e):
            result = result * self
        return result

    def substitute_sum_difference(self) -> "BivariatePoly":
        """P(x+y, x-y), expanded through the Krawtchouk matrix of the degree."""
        d = self.degree
        kmat = krawtchouk_matrix(d)
        out = tuple(sum((c * kmat[j][i] for i, c in enumerate(self.coeffs) if c), Fraction(0)) for j in range(d + 1))
        return BivariatePoly(d, out)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def enumerator_poly(w: WeightEnumerator) -> BivariatePoly:
    return BivariatePoly(w.n, tuple(Fraction(a) for a in w.coeffs))


def expand_sum_difference(coeffs: Sequence[int | Fraction], n: int) -> BivariatePoly:
    """sum_u c_u (x+y)^(n-u) (x-y)^u by repeated polynomial multiplication.

    Independent of the Krawtchouk tables; used as an oracle.
    """
    plus, minus = BivariatePoly.linear(1, 1), BivariatePoly.linear(1, -1)
    total = BivariatePoly.zero(n)
    for u, c in enumerate(coeffs):
        if c:
            total = total + ((plus ** (n - u)) * (minus**u)).scale(c)
    return total
