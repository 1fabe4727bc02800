"""Putative weight enumerators of antipodal codes with large dual distance.

An antipodal code with nontrivial weights d_1 < ... < d_m < n/2 (and their
complements, plus possibly n/2) has enumerator
x^n + y^n + sum alpha_i (x^(n-d_i) y^(d_i) + x^(d_i) y^(n-d_i)) [+ gamma (xy)^(n/2)].
Dual distance >= 2L + 2 means the MacWilliams image vanishes at y^2, ..., y^(2L);
halving, constraint i reads

    C(n, 2i) + sum_j K_2i(d_j; n) alpha_j [+ K_2i(n/2; n) gamma / 2] = 0.

The leading square block of these constraints is solved exactly and the rest
are evaluated as residuals.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Literal, Sequence

from ._linalg import bareiss_det, solve_exact
from .enumerators import krawtchouk
from .exceptions import DomainError

Case = Literal["four", "five"]
DEFAULT_SCAN_NMAX = 200
DEFAULT_LEMMA_NMAX = 10**6

# number of vanishing constraints A_2 .. A_2L for each case
_CONSTRAINTS = {"four": 4, "five": 5}


def is_power_of_two(v: int | Fraction) -> bool:
    if isinstance(v, Fraction):
        if v.denominator != 1:
            return False
        v = v.numerator
    return v > 0 and v & (v - 1) == 0


def _fr(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class LinearSystem:
    """Halved MacWilliams constraints for given weights; rows i = 1..count."""

    n: int
    weights: tuple[int, ...]
    middle: bool
    matrix: tuple[tuple[Fraction, ...], ...]
    constants: tuple[int, ...]

    @property
    def unknowns(self) -> int:
        return len(self.weights) + (1 if self.middle else 0)

    def residuals(self, solution: Sequence[Fraction]) -> list[Fraction]:
        return [c + sum(a * s for a, s in zip(row, solution)) for row, c in zip(self.matrix, self.constants)]


def build_system(n: int, weights: Sequence[int], middle: bool, count: int) -> LinearSystem:
    if 2 * count > n:
        raise DomainError(f"{count} constraints need n >= {2 * count}, got n={n}")
    rows, consts = [], []
    for i in range(1, count + 1):
        j = 2 * i
        row = [Fraction(krawtchouk(j, u, n)) for u in weights]
        if middle:
            row.append(Fraction(krawtchouk(j, n // 2, n), 2))
        rows.append(tuple(row))
        consts.append(comb(n, j))
    return LinearSystem(n, tuple(weights), middle, tuple(rows), tuple(consts))


def elimination_determinants(n: int, d1: int, d2: int) -> tuple[Fraction, Fraction]:
    """det of the homogenized 2x2 systems built from C(n,2i+2) A_2 - C(n,2) A_2i+2."""
    sys4 = build_system(n, (d1, d2), False, 4)
    rows = []
    for i in (1, 2, 3):
        rows.append(tuple(comb(n, 2 * i + 2) * sys4.matrix[0][c] - comb(n, 2) * sys4.matrix[i][c] for c in range(2)))
    return bareiss_det([rows[0], rows[1]]), bareiss_det([rows[0], rows[2]])


@dataclass(frozen=True)
class FeasibilityRecord:
    """Solved putative enumerator; ``cardinality`` is 1 + alpha + beta (+ gamma/2), i.e. |C|/2."""

    case: Case
    n: int
    d1: int
    d2: int
    outcome: str  # "solved" or "singular"
    alpha: Fraction | None = None
    beta: Fraction | None = None
    gamma: Fraction | None = None
    residuals: tuple[Fraction, ...] = ()
    all_residuals_zero: bool = False
    integral: bool = False
    positive: bool = False
    gamma_even: bool | None = None
    cardinality: Fraction | None = None
    power_of_two: bool = False
    am_compatible: bool = False
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def enumerator_feasible(self) -> bool:
        """Every arithmetic flag holds, ignoring the t < d requirement."""
        flags = [self.all_residuals_zero, self.integral, self.positive, self.power_of_two]
        if self.case == "five":
            flags.append(bool(self.gamma_even))
        return self.outcome == "solved" and all(flags)

    @property
    def feasible(self) -> bool:
        return self.enumerator_feasible and self.am_compatible

    def to_dict(self) -> dict:
        opt = lambda v: None if v is None else _fr(v)  # noqa: E731
        return {
            "case": self.case,
            "n": self.n,
            "d1": self.d1,
            "d2": self.d2,
            "outcome": self.outcome,
            "alpha": opt(self.alpha),
            "beta": opt(self.beta),
            "gamma": opt(self.gamma),
            "residuals": [_fr(r) for r in self.residuals],
            "all_residuals_zero": self.all_residuals_zero,
            "integral": self.integral,
            "positive": self.positive,
            "gamma_even": self.gamma_even,
            "cardinality": opt(self.cardinality),
            "power_of_two": self.power_of_two,
            "am_compatible": self.am_compatible,
            "enumerator_feasible": self.enumerator_feasible,
            "feasible": self.feasible,
            "diagnostics": {k: _fr(v) if isinstance(v, Fraction) else v for k, v in self.diagnostics.items()},
        }


def _check_tuple(case: str, n: int, d1: int, d2: int):
    if case not in _CONSTRAINTS:
        raise DomainError(f"case must be 'four' or 'five', got {case!r}")
    if n < 2 * _CONSTRAINTS[case]:
        raise DomainError(f"n={n} too small for the {case}-weight constraints (need n >= {2 * _CONSTRAINTS[case]})")
    if not 0 < d1 < d2 or not 2 * d2 < n:
        raise DomainError(f"need 0 < d1 < d2 < n/2, got n={n}, d1={d1}, d2={d2}")
    if case == "five" and n % 2:
        raise DomainError(f"five-weight case needs even n, got n={n}")


def am_compatible(case: Case, d1: int) -> bool:
    """Whether t = d_dual - L < d1 is possible for some d_dual >= 2L + 2, i.e. d1 >= L + 3."""
    return d1 >= _CONSTRAINTS[case] + 3


def putative_enumerator(case: Case, n: int, d1: int, d2: int) -> FeasibilityRecord:
    """Solve for the free coefficients and flag whether a real code could exist.

    ``am_compatible`` carries the standing hypothesis t < d; without it, the
    even-weight codes of lengths 10 and 12 pass every arithmetic test.
    """
    _check_tuple(case, n, d1, d2)
    five = case == "five"
    system = build_system(n, (d1, d2), five, _CONSTRAINTS[case])
    m = system.unknowns
    lead = [list(r) for r in system.matrix[:m]]
    det = bareiss_det(lead)
    diagnostics: dict = {"leading_det": det}
    if not five:
        diagnostics["det_m1"], diagnostics["det_m2"] = elimination_determinants(n, d1, d2)
    sol = solve_exact(lead, [-c for c in system.constants[:m]])
    if sol is None:
        return FeasibilityRecord(
            case, n, d1, d2, "singular", am_compatible=am_compatible(case, d1), diagnostics=diagnostics
        )
    residuals = tuple(system.residuals(sol)[m:])
    alpha, beta = sol[0], sol[1]
    gamma = sol[2] if five else None
    card = 1 + alpha + beta + (gamma / 2 if five else 0)
    return FeasibilityRecord(
        case,
        n,
        d1,
        d2,
        "solved",
        alpha,
        beta,
        gamma,
        residuals,
        all_residuals_zero=not any(residuals),
        integral=all(v.denominator == 1 for v in sol),
        positive=all(v > 0 for v in sol),
        gamma_even=(gamma.denominator == 1 and gamma.numerator % 2 == 0) if five else None,
        cardinality=card,
        power_of_two=is_power_of_two(card),
        am_compatible=am_compatible(case, d1),
        diagnostics=diagnostics,
    )


def smallest_length(case: Case) -> int:
    """Below this length a dual distance of 2L+2 forces a zero dual, i.e. the full space."""
    return 2 * _CONSTRAINTS[case] + 2


def admissible_tuples(case: Case, n_max: int, n_min: int = 0) -> Iterator[tuple[int, int, int]]:
    for n in range(max(n_min, smallest_length(case)), n_max + 1):
        if case == "five" and n % 2:
            continue
        for d1 in range(1, (n - 1) // 2):
            for d2 in range(d1 + 1, (n + 1) // 2):
                if 2 * d2 < n:
                    yield n, d1, d2


def _records_for_n(args) -> list[FeasibilityRecord]:
    case, n, keep = args
    out = []
    for _, d1, d2 in admissible_tuples(case, n, n_min=n):
        rec = putative_enumerator(case, n, d1, d2)
        if keep == "feasible" and rec.feasible:
            out.append(rec)
        elif keep == "residual_zero" and rec.all_residuals_zero:
            out.append(rec)
        elif keep == "all":
            out.append(rec)
    return out


@dataclass(frozen=True)
class ScanResult:
    case: Case
    n_max: int
    checked: int
    singular: int
    residual_zero: tuple[FeasibilityRecord, ...]
    feasible: tuple[FeasibilityRecord, ...]
    enumerator_feasible: tuple[FeasibilityRecord, ...] = ()

    def summary(self) -> dict:
        return {
            "case": self.case,
            "n_max": self.n_max,
            "tuples_checked": self.checked,
            "singular": self.singular,
            "residual_zero": len(self.residual_zero),
            "enumerator_feasible_without_t_below_d": [[r.n, r.d1, r.d2] for r in self.enumerator_feasible if not r.am_compatible],
            "feasible": len(self.feasible),
        }

    def json_lines(self) -> str:
        lines = [json.dumps(r.to_dict(), sort_keys=True) for r in self.feasible]
        lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return "\n".join(lines) + "\n"


def scan(case: Case, n_max: int = DEFAULT_SCAN_NMAX, workers: int = 1) -> ScanResult:
    """Check every admissible (n, d1, d2) with n <= n_max; results ordered by (n, d1, d2)."""
    if case not in _CONSTRAINTS:
        raise DomainError(f"case must be 'four' or 'five', got {case!r}")
    jobs = [(case, n, "all") for n in range(smallest_length(case), n_max + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_records_for_n, jobs, chunksize=4))
    else:
        batches = [_records_for_n(j) for j in jobs]
    records = [r for batch in batches for r in batch]
    return ScanResult(
        case,
        n_max,
        len(records),
        sum(1 for r in records if r.outcome == "singular"),
        tuple(r for r in records if r.all_residuals_zero),
        tuple(r for r in records if r.feasible),
        tuple(r for r in records if r.enumerator_feasible),
    )


def scan_nonexistence(case: Case, n_max: int = DEFAULT_SCAN_NMAX, workers: int = 1) -> list[FeasibilityRecord]:
    """Feasible putative enumerators up to n_max; each one would be a counterexample."""
    return list(scan(case, n_max, workers).feasible)


# ---------------------------------------------------------------- lemma scans

# numerators and denominators of sum_{i<=L} C(n-1, i) as polynomials in n
_LEMMA_POLYS = {
    4: ((24, -18, 23, -6, 1), 24),
    5: ((0, 184, -110, 55, -10, 1), 120),
}


@dataclass(frozen=True)
class LemmaSolution:
    n: int
    exponent: int


@dataclass(frozen=True)
class LemmaScan:
    degree: int
    n_max: int
    solutions: tuple[LemmaSolution, ...]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "n_max": self.n_max,
            "solutions": [[s.n, s.exponent] for s in self.solutions],
            "complete_up_to": self.n_max,
            "note": "bounded search; solutions with n above n_max are not examined",
        }


def lemma_value(degree: int, n: int) -> Fraction:
    coeffs, den = _LEMMA_POLYS[degree]
    num = 0
    for c in reversed(coeffs):
        num = num * n + c
    return Fraction(num, den)


def _lemma_chunk(args) -> list[LemmaSolution]:
    degree, lo, hi = args
    coeffs, den = _LEMMA_POLYS[degree]
    rev = tuple(reversed(coeffs))
    out = []
    for n in range(lo, hi):
        num = 0
        for c in rev:
            num = num * n + c
        q, r = divmod(num, den)
        if not r and q > 0 and q & (q - 1) == 0:
            out.append(LemmaSolution(n, q.bit_length() - 1))
    return out


def lemma_scan(degree: int, n_max: int = DEFAULT_LEMMA_NMAX, workers: int = 1) -> LemmaScan:
    """All 0 <= n <= n_max where the degree-4 or degree-5 binomial-sum polynomial is a power of 2."""
    if degree not in _LEMMA_POLYS:
        raise DomainError(f"degree must be 4 or 5, got {degree}")
    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    step = 100_000
    jobs = [(degree, lo, min(lo + step, n_max + 1)) for lo in range(0, n_max + 1, step)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_lemma_chunk, jobs))
    else:
        parts = [_lemma_chunk(j) for j in jobs]
    return LemmaScan(degree, n_max, tuple(s for p in parts for s in p))


# ---------------------------------------------------------------- conjecture probe


@dataclass(frozen=True)
class ConjectureProbe:
    ell: int
    n: int
    weights: tuple[int, ...]
    outcome: str  # confirm, refute, inapplicable, singular
    solution: tuple[Fraction, ...] = ()
    residuals: tuple[Fraction, ...] = ()
    lhs: Fraction | None = None
    rhs: int = 0

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "n": self.n,
            "weights": list(self.weights),
            "outcome": self.outcome,
            "solution": [_fr(v) for v in self.solution],
            "residuals": [_fr(v) for v in self.residuals],
            "lhs": None if self.lhs is None else _fr(self.lhs),
            "rhs": str(self.rhs),
        }


def conjecture_probe(ell: int, n: int, weights: Sequence[int]) -> ConjectureProbe:
    """Test 1 + sum of coefficients == sum_{i<=ell} C(n-1, i) for a zero-residual solution.

    For odd ``ell`` the last weight must be n/2 and its coefficient counts half.
    """
    if ell < 4:
        raise DomainError(f"ell must be at least 4, got {ell}")
    weights = tuple(int(w) for w in weights)
    need = (ell + 1) // 2
    if len(weights) != need:
        raise DomainError(f"ell={ell} needs {need} weights, got {len(weights)}")
    if any(b <= a for a, b in zip(weights, weights[1:])) or weights[0] <= 0:
        raise DomainError("weights must be positive and strictly increasing")
    odd = ell % 2 == 1
    if odd:
        if n % 2:
            raise DomainError(f"odd ell needs even n, got n={n}")
        if weights[-1] * 2 != n:
            raise DomainError("for odd ell the last weight must be n/2")
        free = weights[:-1]
    else:
        free = weights
    if any(2 * w >= n for w in free):
        raise DomainError("weights other than a final n/2 must be below n/2")
    system = build_system(n, free, odd, ell)
    rhs = sum(comb(n - 1, i) for i in range(ell + 1))
    sol = solve_exact([list(r) for r in system.matrix[:need]], [-c for c in system.constants[:need]])
    if sol is None:
        return ConjectureProbe(ell, n, weights, "singular", rhs=rhs)
    residuals = tuple(system.residuals(sol)[need:])
    lhs = 1 + sum(sol[:-1], Fraction(0)) + (sol[-1] / 2 if odd else sol[-1])
    if any(residuals):
        outcome = "inapplicable"
    else:
        outcome = "confirm" if lhs == rhs else "refute"
    return ConjectureProbe(ell, n, weights, outcome, tuple(sol), residuals, lhs, rhs)
