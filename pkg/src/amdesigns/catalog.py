"""Named binary codes used as a test corpus."""
from __future__ import annotations

import re
from itertools import combinations

from .exceptions import DomainError
from .gf2 import BinaryCode, dual_code

# enumerable on both sides within the default budget
STANDARD_CATALOG = (
    "hamming_7_4",
    "ext_hamming_8_4",
    "golay_23_12",
    "ext_golay_24_12",
    "rm(0,3)",
    "rm(1,3)",
    "rm(1,4)",
    "rm(2,4)",
    "repetition_2",
    "repetition_5",
    "even_weight_6",
)

# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
_GOLAY_POLY = 0b110001110101


def _extend_by_parity(code: BinaryCode) -> BinaryCode:
    rows = [(g << 1) | (g.bit_count() & 1) for g in code.generators]
    return BinaryCode(code.n + 1, tuple(rows))


def hamming(r: int = 3) -> BinaryCode:
    """Length 2^r - 1 Hamming code, the dual of the simplex code."""
    n = (1 << r) - 1
    simplex = []
    for bit in range(r):
        row = 0
        for j in range(n):
            if ((j + 1) >> bit) & 1:
                row |= 1 << (n - 1 - j)
        simplex.append(row)
    return dual_code(BinaryCode(n, tuple(simplex)))


def golay23() -> BinaryCode:
    rows = tuple(_GOLAY_POLY << s for s in range(12))
    return BinaryCode(23, rows)


def reed_muller(r: int, m: int) -> BinaryCode:
    if m < 0 or not 0 <= r <= m:
        raise DomainError(f"need 0 <= r <= m, got r={r}, m={m}")
    n = 1 << m
    rows = []
    for deg in range(r + 1):
        for vars_ in combinations(range(m), deg):
            row = 0
            for j in range(n):
                if all((j >> v) & 1 for v in vars_):
                    row |= 1 << (n - 1 - j)
            rows.append(row)
    return BinaryCode(n, tuple(rows))


def repetition(n: int) -> BinaryCode:
    return BinaryCode(n, ((1 << n) - 1,))


def even_weight(n: int) -> BinaryCode:
    return dual_code(repetition(n))


_RM = re.compile(r"rm[(_](\d+)[,_](\d+)\)?$")
_PARAM = re.compile(r"(repetition|even_weight)_(\d+)$")


def catalog_code(name: str) -> BinaryCode:
    """Look up a code by name, e.g. ``ext_golay_24_12``, ``rm(1,4)``, ``repetition_5``."""
    key = name.strip().lower().replace(" ", "")
    fixed = {
        "hamming_7_4": lambda: hamming(3),
        "ext_hamming_8_4": lambda: _extend_by_parity(hamming(3)),
        "golay_23_12": golay23,
        "ext_golay_24_12": lambda: _extend_by_parity(golay23()),
    }
    if key in fixed:
        return fixed[key]()
    m = _RM.match(key)
    if m:
        return reed_muller(int(m.group(1)), int(m.group(2)))
    m = _PARAM.match(key)
    if m:
        size = int(m.group(2))
        if size < 1:
            raise DomainError("length must be positive")
        return repetition(size) if m.group(1) == "repetition" else even_weight(size)
    raise DomainError(f"unknown code name {name!r}")
