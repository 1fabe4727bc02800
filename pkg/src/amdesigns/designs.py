"""Support designs of binary codes and t-design tests.

Two independent tests are provided: direct counting of blocks through every
t-subset, and the harmonic criterion (a block set is a t-design exactly when
every harmonic function of degree 1..t sums to zero over the blocks).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .exceptions import BudgetExceeded, DomainError
from .gf2 import DEFAULT_MAX_DIM, BinaryCode, enumerate_codewords_of_weight, mask_from_support, support, weight_distribution
from .harmonics import MAX_N, BasisSource, iter_harm_basis

MAX_TSUBSETS = 10**7
# cap on the (blocks x t-subsets x t) index array built per chunk
_CHUNK_CELLS = 4_000_000


@dataclass(frozen=True)
class SupportDesign:
    """Blocks are bit masks (same convention as codewords), sorted and distinct."""

    n: int
    w: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(set(self.blocks)))
        if len(blocks) != len(self.blocks):
            raise DomainError("duplicate blocks")
        for b in blocks:
            if b.bit_count() != self.w or b >> self.n:
                raise DomainError(f"block {b:b} is not a {self.w}-subset of {self.n} points")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_subsets(cls, n: int, w: int, subsets: Iterable[Iterable[int]]) -> "SupportDesign":
        return cls(n, w, tuple(mask_from_support(s, n) for s in subsets))

    def block_sets(self) -> list[tuple[int, ...]]:
        return [support(b, self.n) for b in self.blocks]

    def to_dict(self) -> dict:
        return {"n": self.n, "w": self.w, "blocks": [list(s) for s in self.block_sets()]}

    @classmethod
    def from_dict(cls, data: dict) -> "SupportDesign":
        return cls.from_subsets(int(data["n"]), int(data["w"]), data["blocks"])


@dataclass(frozen=True)
class DesignCheckResult:
    t: int
    is_design: bool
    lambda_: int | None
    witness: tuple | None = None
    empty: bool = False
    method: str = "direct"

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "is_design": self.is_design,
            "lambda": self.lambda_,
            "witness": _jsonable(self.witness),
            "empty": self.empty,
            "method": self.method,
        }


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    return obj


def support_design(code: BinaryCode, w: int, max_dim: int = DEFAULT_MAX_DIM) -> SupportDesign:
    if not 0 < w <= code.n:
        raise DomainError(f"weight {w} outside 1..{code.n}")
    return SupportDesign(code.n, w, tuple(enumerate_codewords_of_weight(code, w, max_dim)))


def colex_unrank(rank: int, t: int) -> tuple[int, ...]:
    out = []
    for i in range(t, 0, -1):
        s = i - 1
        while comb(s + 1, i) <= rank:
            s += 1
        out.append(s)
        rank -= comb(s, i)
    return tuple(reversed(out))


def _expected_lambda(design: SupportDesign, t: int) -> Fraction:
    return Fraction(len(design.blocks) * comb(design.w, t), comb(design.n, t))


def _validate(design: SupportDesign, t: int, max_subsets: int):
    if t < 0 or t > design.w:
        raise DomainError(f"strength {t} outside 0..{design.w}")
    if comb(design.n, t) > max_subsets:
        raise BudgetExceeded(f"C({design.n},{t}) t-subsets exceed the budget {max_subsets}")


def tsubset_counts(design: SupportDesign, t: int) -> list[int] | np.ndarray:
    """Number of blocks through each t-subset, indexed by colex rank.

    Each block increments its own C(w, t) subsets, so the cost is
    |blocks| * C(w, t) rather than C(n, t) containment tests.
    """
    n, w = design.n, design.w
    total = comb(n, t)
    if not design.blocks:
        return np.zeros(total, dtype=np.int64)
    if t == 0:
        return np.array([len(design.blocks)], dtype=np.int64)
    binom_table = np.array([[comb(s, i) for i in range(t + 1)] for s in range(n)], dtype=np.int64)
    positions = np.array(design.block_sets(), dtype=np.int64)
    idx = np.array(list(combinations(range(w), t)), dtype=np.int64)
    counts = np.zeros(total, dtype=np.int64)
    idx_step = max(1, _CHUNK_CELLS // t)
    cols = np.arange(1, t + 1)
    for istart in range(0, len(idx), idx_step):
        part = idx[istart : istart + idx_step]
        step = max(1, _CHUNK_CELLS // (len(part) * t))
        for start in range(0, len(positions), step):
            sub = positions[start : start + step][:, part]  # (blocks, subsets, t), rows sorted
            ranks = binom_table[sub, cols].sum(axis=2)
            counts += np.bincount(ranks.ravel(), minlength=total)
    return counts


def check_t_design_direct(design: SupportDesign, t: int, max_subsets: int = MAX_TSUBSETS) -> DesignCheckResult:
    _validate(design, t, max_subsets)
    if not design.blocks:
        return DesignCheckResult(t, True, 0, empty=True)
    counts = tsubset_counts(design, t)
    lo, hi = int(np.argmin(counts)), int(np.argmax(counts))
    if counts[lo] != counts[hi]:
        witness = ((colex_unrank(lo, t), int(counts[lo])), (colex_unrank(hi, t), int(counts[hi])))
        return DesignCheckResult(t, False, None, witness)
    lam = int(counts[0])
    if lam != _expected_lambda(design, t):
        raise AssertionError("block count identity violated")
    return DesignCheckResult(t, True, lam)


def _containment_counter(design: SupportDesign):
    cache: dict[int, int] = {}
    if design.n < 64:
        arr = np.array(design.blocks, dtype=np.uint64)

        def count(z: int) -> int:
            if z not in cache:
                zz = np.uint64(z)
                cache[z] = int(np.count_nonzero((arr & zz) == zz))
            return cache[z]

    else:

        def count(z: int) -> int:
            if z not in cache:
                cache[z] = sum(1 for b in design.blocks if b & z == z)
            return cache[z]

    return count


def harmonic_block_sum(design: SupportDesign, f) -> Fraction:
    """Sum over blocks of the extended function, i.e. sum_z f(z) * #(blocks containing z)."""
    count = _containment_counter(design)
    return sum((v * count(z) for z, v in f.masks()), Fraction(0))


def check_t_design_harmonic(
    design: SupportDesign,
    t: int,
    basis_source: BasisSource | None = None,
    max_n: int = MAX_N,
) -> DesignCheckResult:
    """Harmonic test; a failure carries the first violating (h, basis index, sum)."""
    if t < 0 or t > design.w:
        raise DomainError(f"strength {t} outside 0..{design.w}")
    if basis_source is None:

        def basis_source(n, h):
            return iter_harm_basis(n, h, max_n=max_n, max_h=max(t, 1))

    if not design.blocks:
        return DesignCheckResult(t, True, 0, empty=True, method="harmonic")
    count = _containment_counter(design)
    for h in range(1, t + 1):
        for index, f in enumerate(basis_source(design.n, h)):
            s = sum((v * count(z) for z, v in f.masks()), Fraction(0))
            if s:
                return DesignCheckResult(t, False, None, (h, index, s), method="harmonic")
    lam = _expected_lambda(design, t)
    if lam.denominator != 1:
        raise AssertionError("harmonic test passed but lambda is not an integer")
    return DesignCheckResult(t, True, int(lam), method="harmonic")


@dataclass(frozen=True)
class WeightStrength:
    weight: int
    blocks: int
    strength: int
    capped: bool
    trivial: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class DeltaS:
    """Minimum and maximum design strength over nonempty, nontrivial weights.

    Weights 0 and n (a single empty or full block) are listed in ``table``
    with ``trivial=True`` and left out of both extrema.
    """

    delta: int | None
    s: int | None
    delta_capped: bool
    s_capped: bool
    t_max: int
    table: tuple[WeightStrength, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "s": self.s,
            "delta_capped": self.delta_capped,
            "s_capped": self.s_capped,
            "t_max": self.t_max,
            "convention": "weights 0 and n excluded from delta and s",
            "table": [row.to_dict() for row in self.table],
        }


def design_strength(design: SupportDesign, t_max: int, max_subsets: int = MAX_TSUBSETS) -> tuple[int, bool]:
    """Largest t <= min(t_max, w) for which the design is a t-design, and whether that bound was hit."""
    bound = min(t_max, design.w)
    strength = 0
    for t in range(1, bound + 1):
        if not check_t_design_direct(design, t, max_subsets).is_design:
            return strength, False
        strength = t
    return strength, strength == t_max


def delta_s(code: BinaryCode, t_max: int, max_dim: int = DEFAULT_MAX_DIM, max_subsets: int = MAX_TSUBSETS) -> DeltaS:
    if t_max < 0:
        raise DomainError("t_max must be nonnegative")
    dist = weight_distribution(code, max_dim)
    rows = []
    for w in range(1, code.n + 1):
        if not dist.coeffs[w]:
            continue
        design = support_design(code, w, max_dim)
        strength, capped = design_strength(design, t_max, max_subsets)
        rows.append(WeightStrength(w, len(design.blocks), strength, capped, w == code.n))
    core = [r for r in rows if not r.trivial]
    if not core:
        return DeltaS(None, None, False, False, t_max, tuple(rows))
    lo = min(core, key=lambda r: r.strength)
    hi = max(core, key=lambda r: r.strength)
    return DeltaS(lo.strength, hi.strength, lo.capped, hi.capped, t_max, tuple(rows))
