"""Discrete harmonic functions on k-subsets and harmonic weight enumerators.

Subsets of the coordinate set ``{0, ..., n-1}`` are sorted index tuples and
are ordered colexicographically. Harmonic functions are stored sparsely:
only nonzero values are kept.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, lcm
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from ._linalg import nullspace_exact, rank_mod_p
from .enumerators import BivariatePoly
from .exceptions import BudgetExceeded, DomainError
from .gf2 import BinaryCode, all_codewords, mask_from_support

MAX_N = 24
MAX_H = 6
# inclusion-matrix size allowed for the exact rational nullspace route
MAX_ELIMINATION_ENTRIES = 250_000

Subset = tuple[int, ...]


def colex_rank(subset: Sequence[int]) -> int:
    return sum(comb(s, i + 1) for i, s in enumerate(subset))


def colex_subsets(n: int, h: int) -> list[Subset]:
    return sorted(combinations(range(n), h), key=lambda s: s[::-1])


@dataclass(frozen=True)
class HarmonicFunction:
    """A real function on the h-subsets of an n-set, kept as nonzero (subset, value) pairs."""

    n: int
    h: int
    entries: tuple[tuple[Subset, Fraction], ...]

    def __post_init__(self):
        clean = {}
        for z, v in self.entries:
            z = tuple(sorted(z))
            if len(z) != self.h or len(set(z)) != self.h or (z and not 0 <= z[0] <= z[-1] < self.n):
                raise DomainError(f"{z} is not an {self.h}-subset of range({self.n})")
            v = Fraction(v)
            if v:
                clean[z] = clean.get(z, Fraction(0)) + v
        ordered = tuple(sorted(((z, v) for z, v in clean.items() if v), key=lambda e: e[0][::-1]))
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def from_dense(cls, n: int, h: int, values: Sequence) -> "HarmonicFunction":
        subsets = colex_subsets(n, h)
        if len(values) != len(subsets):
            raise DomainError(f"expected {len(subsets)} values")
        return cls(n, h, tuple(zip(subsets, values)))

    def value(self, z: Iterable[int]) -> Fraction:
        z = tuple(sorted(z))
        for s, v in self.entries:
            if s == z:
                return v
        return Fraction(0)

    def to_dense(self) -> list[Fraction]:
        dense = [Fraction(0)] * comb(self.n, self.h)
        for z, v in self.entries:
            dense[colex_rank(z)] = v
        return dense

    def gamma(self) -> dict[Subset, Fraction]:
        """Image under the differentiation map, as nonzero values on (h-1)-subsets."""
        out: dict[Subset, Fraction] = {}
        if self.h == 0:
            return out
        for z, v in self.entries:
            for drop in range(self.h):
                y = z[:drop] + z[drop + 1 :]
                out[y] = out.get(y, Fraction(0)) + v
        return {y: v for y, v in out.items() if v}

    def is_harmonic(self) -> bool:
        return not self.gamma()

    def masks(self) -> list[tuple[int, Fraction]]:
        return [(mask_from_support(z, self.n), v) for z, v in self.entries]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "entries": [[list(z), f"{v.numerator}/{v.denominator}"] for z, v in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "HarmonicFunction":
        return cls(int(data["n"]), int(data["h"]), tuple((tuple(z), Fraction(v)) for z, v in data["entries"]))

    @classmethod
    def from_json(cls, text: str) -> "HarmonicFunction":
        return cls.from_dict(json.loads(text))


def harm_dimension_formula(n: int, h: int) -> int:
    return 1 if h == 0 else comb(n, h) - comb(n, h - 1)


def _check_budget(n: int, h: int, max_n: int, max_h: int):
    if not 0 <= h <= n:
        raise DomainError(f"degree {h} outside 0..{n}")
    if n > max_n or h > max_h:
        raise BudgetExceeded(f"harmonic basis for n={n}, h={h} exceeds budget n<={max_n}, h<={max_h}")


def _tableau_subsets(n: int, h: int) -> Iterator[tuple[Subset, Subset]]:
    """Pairs (second row, first-row column heads) of standard tableaux of shape (n-h, h)."""
    for low in colex_subsets(n, h):
        rest = [j for j in range(n) if j not in low]
        heads = tuple(rest[:h])
        if all(a < b for a, b in zip(heads, low)):
            yield low, heads


def _polytabloid(n: int, low: Subset, heads: Subset) -> HarmonicFunction:
    # product over columns of (delta_low - delta_head): pick one point per column
    h = len(low)
    entries = []
    for choice in range(1 << h):
        z = []
        sign = 1
        for i in range(h):
            if (choice >> i) & 1:
                z.append(heads[i])
                sign = -sign
            else:
                z.append(low[i])
        entries.append((tuple(z), Fraction(sign)))
    return HarmonicFunction(n, h, tuple(entries))


def iter_harm_basis(n: int, h: int, max_n: int = MAX_N, max_h: int = MAX_H) -> Iterator[HarmonicFunction]:
    """Lazily yield the standard-tableau basis of the degree-h harmonic space.

    Each element is the signed indicator of a transversal of h disjoint pairs
    (column head, second-row entry); such products are killed by the
    differentiation map, and the standard tableaux give a basis.
    """
    _check_budget(n, h, max_n, max_h)
    if h == 0:
        yield HarmonicFunction(n, 0, (((), Fraction(1)),))
        return
    if 2 * h > n:
        return
    for low, heads in _tableau_subsets(n, h):
        yield _polytabloid(n, low, heads)


def inclusion_matrix(n: int, h: int) -> list[list[int]]:
    """Rows: (h-1)-subsets, columns: h-subsets, both colex; entry 1 on containment."""
    cols = colex_subsets(n, h)
    rows = colex_subsets(n, h - 1)
    index = {r: i for i, r in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, z in enumerate(cols):
        for drop in range(h):
            mat[index[z[:drop] + z[drop + 1 :]]][j] = 1
    return mat


def harm_basis(
    n: int, h: int, method: str = "tableau", max_n: int = MAX_N, max_h: int = MAX_H
) -> list[HarmonicFunction]:
    """A rational basis of the degree-h harmonic space on an n-set.

    ``method="elimination"`` returns the kernel basis of the inclusion matrix
    found by exact Gaussian elimination with colex pivot order (small sizes
    only); ``"tableau"`` returns the sparse standard-tableau basis.
    """
    if method == "tableau":
        return list(iter_harm_basis(n, h, max_n, max_h))
    if method != "elimination":
        raise DomainError(f"unknown basis method {method!r}")
    _check_budget(n, h, max_n, max_h)
    if h == 0:
        return [HarmonicFunction(n, 0, (((), Fraction(1)),))]
    if comb(n, h) * comb(n, h - 1) > MAX_ELIMINATION_ENTRIES:
        raise BudgetExceeded(f"inclusion matrix for n={n}, h={h} too large for exact elimination")
    kernel = nullspace_exact(inclusion_matrix(n, h), comb(n, h))
    return [HarmonicFunction.from_dense(n, h, vec) for vec in kernel]


def harm_dimension(n: int, h: int) -> int:
    """Dimension of the kernel, from the rank of the inclusion matrix.

    The rank is computed modulo a large prime; when that already equals the
    smaller matrix side it is exact, otherwise the exact rational kernel is used.
    """
    if h == 0:
        return 1
    if not 0 < h <= n:
        raise DomainError(f"degree {h} outside 0..{n}")
    mat = np.array(inclusion_matrix(n, h), dtype=np.int64)
    r = rank_mod_p(mat)
    if r == min(mat.shape):
        return comb(n, h) - r
    return len(nullspace_exact(mat.tolist(), comb(n, h)))


def tilde_evaluate(f: HarmonicFunction, u: Iterable[int] | int) -> Fraction:
    """Sum of f over the h-subsets of ``u`` (index iterable or bit mask)."""
    mask = u if isinstance(u, int) else mask_from_support(u, f.n)
    total = Fraction(0)
    for zmask, v in f.masks():
        if mask & zmask == zmask:
            total += v
    return total


@dataclass(frozen=True)
class HarmonicEnumerator:
    w_poly: BivariatePoly
    z_poly: BivariatePoly
    h: int
    code_size: int

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "code_size": self.code_size,
            "W": self.w_poly.to_strings(),
            "Z": self.z_poly.to_strings(),
        }


@lru_cache(maxsize=8)
def _codeword_table(code: BinaryCode):
    words = all_codewords(code)
    if isinstance(words, np.ndarray):
        return words, np.bitwise_count(words).astype(np.int64)
    return words, [w.bit_count() for w in words]


def _integer_scaled(f: HarmonicFunction) -> tuple[list[tuple[int, int]], int]:
    den = lcm(*(v.denominator for _, v in f.entries)) if f.entries else 1
    return [(m, int(v * den)) for m, v in f.masks()], den


def harmonic_weight_enumerator(code: BinaryCode, f: HarmonicFunction) -> HarmonicEnumerator:
    """W_{C,f} together with its quotient by (xy)^h."""
    if f.n != code.n:
        raise DomainError(f"function on {f.n} points, code of length {code.n}")
    n, h = code.n, f.h
    words, weights = _codeword_table(code)
    scaled, den = _integer_scaled(f)
    acc = [0] * (n + 1)
    if isinstance(words, np.ndarray):
        for zmask, v in scaled:
            z = np.uint64(zmask)
            hits = np.bincount(weights[(words & z) == z], minlength=n + 1)
            # multiply in Python ints: v may be an arbitrary scaled numerator
            for i in np.flatnonzero(hits):
                acc[i] += v * int(hits[i])
    else:
        for zmask, v in scaled:
            for w, wt in zip(words, weights):
                if w & zmask == zmask:
                    acc[wt] += v
    coeffs = tuple(Fraction(c, den) for c in acc)
    if any(coeffs[:h]) or any(coeffs[n - h + 1 :]):
        raise DomainError("harmonic enumerator is not divisible by (xy)^h; f is not harmonic")
    w_poly = BivariatePoly(n, coeffs)
    z_poly = BivariatePoly(n - 2 * h, coeffs[h : n - h + 1]) if n >= 2 * h else BivariatePoly.zero(0)
    return HarmonicEnumerator(w_poly, z_poly, h, 1 << code.k)


def bachoc_transform(z: BivariatePoly, h: int, code_size: int) -> BivariatePoly:
    """Quotient polynomial of the dual code's harmonic enumerator.

    The identity is stated with the factor 2^(n/2) / |C| and the substitution
    x -> (x+y)/sqrt2, y -> (x-y)/sqrt2. Because Z is homogeneous of degree
    n - 2h, that substitution equals 2^(-(n-2h)/2) Z(x+y, x-y), and the powers
    of two combine to 2^h. The result is (-1)^h 2^h / |C| * Z(x+y, x-y),
    with no radicals.
    """
    if h < 0:
        raise DomainError("degree must be nonnegative")
    if code_size <= 0 or code_size & (code_size - 1):
        raise DomainError(f"code size {code_size} is not a power of 2")
    factor = Fraction((-1) ** h * (1 << h), code_size)
    return z.substitute_sum_difference().scale(factor)


BasisSource = Callable[[int, int], Iterable[HarmonicFunction]]
