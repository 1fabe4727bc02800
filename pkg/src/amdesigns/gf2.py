"""Binary linear codes stored as bit-packed generator rows.

A codeword of length ``n`` is an ``int`` whose bit ``n-1-j`` holds coordinate
``j``, so ``format(c, f"0{n}b")`` is its bit-string and numeric order equals
lexicographic order of bit-strings.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .enumerators import WeightEnumerator, macwilliams_transform
from .exceptions import BudgetExceeded, DomainError

DEFAULT_MAX_DIM = 28
# spans up to this many generators are materialized in one numpy block
_BLOCK_DIM = 16


def _rref(rows: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Reduced row echelon form (pivots on leading bits); returns rows and #dropped."""
    pivots: dict[int, int] = {}
    dropped = 0
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead in pivots:
                r ^= pivots[lead]
            else:
                pivots[lead] = r
                break
        else:
            dropped += 1
    for lead in sorted(pivots, reverse=True):
        p = pivots[lead]
        for other in pivots:
            if other > lead and (pivots[other] >> lead) & 1:
                pivots[other] ^= p
    return tuple(pivots[lead] for lead in sorted(pivots, reverse=True)), dropped


@dataclass(frozen=True)
class BinaryCode:
    """A binary ``[n, k]`` code in canonical reduced row echelon form.

    Two instances compare equal exactly when they span the same subspace.
    ``redundant_rows`` records how many input rows were linearly dependent.
    """

    n: int
    generators: tuple[int, ...]
    redundant_rows: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.n <= 0:
            raise DomainError(f"code length must be positive, got {self.n}")
        for g in self.generators:
            if g < 0 or g >> self.n:
                raise DomainError("generator row wider than the code length")
        canon, dropped = _rref(self.generators)
        object.__setattr__(self, "generators", canon)
        object.__setattr__(self, "redundant_rows", self.redundant_rows + dropped)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[str | int]) -> "BinaryCode":
        ints = [int(r, 2) if isinstance(r, str) else int(r) for r in rows]
        return cls(n, tuple(ints))

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def has_all_ones(self) -> bool:
        return contains(self, (1 << self.n) - 1)

    def rows(self) -> list[str]:
        return [format(g, f"0{self.n}b") for g in self.generators]

    def __repr__(self):
        return f"BinaryCode([{self.n},{self.k}])"


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    d: int
    d_dual: int
    has_all_ones: bool
    weights: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_dual": self.d_dual,
            "has_all_ones": self.has_all_ones,
            "weights": list(self.weights),
        }


# ---------------------------------------------------------------- text format

_DIRECTIVE = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


def parse_generator_matrix(text: str) -> BinaryCode:
    """Parse rows of ``0``/``1`` characters; ``#`` starts a comment.

    Whitespace inside a row is ignored. A comment of the form ``# n=<len>``
    fixes the length, which is how the zero code round-trips.
    """
    rows: list[str] = []
    declared_n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, hash_, comment = raw.partition("#")
        if hash_:
            m = _DIRECTIVE.match("#" + comment)
            if m:
                declared_n = int(m.group(1))
        row = "".join(body.split())
        if not row:
            continue
        bad = set(row) - {"0", "1"}
        if bad:
            raise DomainError(f"line {lineno}: unexpected characters {sorted(bad)}")
        rows.append(row)
    if not rows:
        if declared_n is None:
            raise DomainError("empty generator matrix")
        return BinaryCode(declared_n, ())
    n = len(rows[0])
    for row in rows:
        if len(row) != n:
            raise DomainError(f"ragged rows: lengths {n} and {len(row)}")
    if declared_n is not None and declared_n != n:
        raise DomainError(f"declared length {declared_n} but rows have length {n}")
    return BinaryCode.from_rows(n, rows)


def format_generator_matrix(code: BinaryCode) -> str:
    lines = [f"# [{code.n},{code.k}] binary code", f"# n={code.n}"]
    lines.extend(code.rows())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- operations


def contains(code: BinaryCode, word: int) -> bool:
    for g in code.generators:
        if (word >> (g.bit_length() - 1)) & 1:
            word ^= g
    return word == 0


def dual_code(code: BinaryCode) -> BinaryCode:
    """The orthogonal complement, built from the RREF: H = [P^T | I] up to column order."""
    n = code.n
    pivots = [g.bit_length() - 1 for g in code.generators]
    pivot_set = set(pivots)
    rows = []
    for free in range(n):
        if free in pivot_set:
            continue
        # dual vector: 1 at this free bit, and at every pivot whose row has this bit
        v = 1 << free
        for g, p in zip(code.generators, pivots):
            if (g >> free) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode(n, tuple(rows))


def _check_budget(dim: int, max_dim: int):
    if dim > max_dim:
        raise BudgetExceeded(
            f"enumerating 2^{dim} codewords exceeds the budget 2^{max_dim}; "
            "if the dual is small, enumerate it and apply the MacWilliams transform"
        )


def _span_array(gens: tuple[int, ...]) -> np.ndarray:
    words = np.zeros(1, dtype=np.uint64)
    for g in gens:
        words = np.concatenate([words, words ^ np.uint64(g)])
    return words


def iter_codeword_blocks(code: BinaryCode, max_dim: int = DEFAULT_MAX_DIM) -> Iterator[np.ndarray | list[int]]:
    """Yield the codewords in blocks (numpy ``uint64`` arrays when ``n < 64``).

    The union of the blocks is the code, each word exactly once, in a
    deterministic but unsorted order.
    """
    _check_budget(code.k, max_dim)
    gens = code.generators
    if code.n < 64:
        low, high = gens[:_BLOCK_DIM], gens[_BLOCK_DIM:]
        base = _span_array(low)
        offset = 0
        # Gray-code walk over the high generators
        for i in range(1 << len(high)):
            if i:
                offset ^= high[(i & -i).bit_length() - 1]
            yield base ^ np.uint64(offset) if offset else base
    else:
        words = [0]
        for g in gens:
            words += [w ^ g for w in words]
        yield words


def all_codewords(code: BinaryCode, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray | list[int]:
    blocks = list(iter_codeword_blocks(code, max_dim))
    if isinstance(blocks[0], np.ndarray):
        return np.concatenate(blocks)
    return [w for b in blocks for w in b]


def weight_distribution(code: BinaryCode, max_dim: int = DEFAULT_MAX_DIM) -> WeightEnumerator:
    n = code.n
    counts = np.zeros(n + 1, dtype=np.int64)
    for block in iter_codeword_blocks(code, max_dim):
        if isinstance(block, np.ndarray):
            counts += np.bincount(np.bitwise_count(block), minlength=n + 1)
        else:
            for w in block:
                counts[w.bit_count()] += 1
    return WeightEnumerator(n, tuple(int(c) for c in counts))


def enumerate_codewords_of_weight(code: BinaryCode, w: int, max_dim: int = DEFAULT_MAX_DIM) -> Iterator[int]:
    """Codewords of weight ``w`` in lexicographic bit-string order."""
    if not 0 <= w <= code.n:
        raise DomainError(f"weight {w} outside 0..{code.n}")
    found: list[int] = []
    for block in iter_codeword_blocks(code, max_dim):
        if isinstance(block, np.ndarray):
            found.extend(int(c) for c in block[np.bitwise_count(block) == w])
        else:
            found.extend(c for c in block if c.bit_count() == w)
    found.sort()
    yield from found


def both_distributions(code: BinaryCode, max_dim: int = DEFAULT_MAX_DIM) -> tuple[WeightEnumerator, WeightEnumerator]:
    """Weight distributions of ``code`` and its dual, enumerating the smaller side."""
    if code.k <= code.n - code.k:
        w = weight_distribution(code, max_dim)
        return w, macwilliams_transform(w, code.k)
    dual = dual_code(code)
    wd = weight_distribution(dual, max_dim)
    return macwilliams_transform(wd, dual.k), wd


def _min_weight(w: WeightEnumerator) -> int:
    return next((i for i in range(1, w.n + 1) if w.coeffs[i]), w.n + 1)


def code_profile(code: BinaryCode, max_dim: int = DEFAULT_MAX_DIM) -> CodeProfile:
    """Parameters of a code; a zero code reports minimum distance ``n + 1``."""
    w, wd = both_distributions(code, max_dim)
    return CodeProfile(
        n=code.n,
        k=code.k,
        d=_min_weight(w),
        d_dual=_min_weight(wd),
        has_all_ones=w.coeffs[code.n] > 0,
        weights=tuple(i for i in range(1, code.n + 1) if w.coeffs[i]),
    )


# ---------------------------------------------------------------- bit helpers


def support(word: int, n: int) -> tuple[int, ...]:
    return tuple(j for j in range(n) if (word >> (n - 1 - j)) & 1)


def mask_from_support(indices: Iterable[int], n: int) -> int:
    m = 0
    for j in indices:
        if not 0 <= j < n:
            raise DomainError(f"coordinate {j} outside 0..{n - 1}")
        m |= 1 << (n - 1 - j)
    return m
