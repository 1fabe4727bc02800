"""Assmus-Mattson condition and the extra-design criteria for dual codes.

For an antipodal code with four (resp. five) nontrivial weights satisfying the
Assmus-Mattson condition with d_dual - t = 4 (resp. 5), a closed-form sum in
(n, d1, d2, t, w) decides whether the dual's support design at weight
2w+t+2 (resp. 2w+t+1) is a (t+1)-design. The sums are checked here against a
direct expansion of the dual harmonic quotient polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from ._linalg import solve_exact
from .designs import DesignCheckResult, check_t_design_direct, support_design
from .enumerators import BivariatePoly, binom
from .exceptions import DomainError
from .gf2 import DEFAULT_MAX_DIM, BinaryCode, CodeProfile, both_distributions, code_profile, dual_code

Case = Literal["four", "five"]

# (d_dual, t) pairs allowed when d_dual - t = 4 and 5
ALLOWED_CASES = {"four": {(6, 2), (8, 4)}, "five": {(6, 1), (8, 3), (10, 5)}}


@dataclass(frozen=True)
class AMReport:
    profile: CodeProfile
    dual_weights: tuple[int, ...]
    t_values: tuple[int, ...]
    code_designs: tuple[tuple[int, int], ...] = ()
    dual_designs: tuple[tuple[int, int], ...] = ()

    @property
    def t(self) -> int | None:
        return max(self.t_values) if self.t_values else None

    def to_dict(self) -> dict:
        return {
            "profile": self.profile.to_dict(),
            "dual_weights": list(self.dual_weights),
            "t_values": list(self.t_values),
            "code_designs": [list(p) for p in self.code_designs],
            "dual_designs": [list(p) for p in self.dual_designs],
        }


def am_condition_holds(profile: CodeProfile, t: int) -> bool:
    count = sum(1 for u in profile.weights if u <= profile.n - t)
    return profile.d_dual - t == count


def _design_assertions(profile, dual_weights, t):
    n = profile.n
    code_side = tuple((u, t) for u in profile.weights if profile.d <= u <= n - t)
    dual_side = tuple((w, t) for w in dual_weights if profile.d_dual <= w <= n)
    return code_side, dual_side


def am_t_values(code: BinaryCode, max_dim: int = DEFAULT_MAX_DIM) -> AMReport:
    """All 1 <= t < d satisfying the Assmus-Mattson equality, and the designs implied for the largest."""
    prof = code_profile(code, max_dim)
    if not prof.has_all_ones:
        raise DomainError("the all-ones word is not in the code")
    if prof.d_dual > code.n:
        raise DomainError("zero dual code: dual minimum distance undefined")
    _, wd = both_distributions(code, max_dim)
    dual_weights = tuple(i for i in range(1, code.n + 1) if wd.coeffs[i])
    ts = tuple(t for t in range(1, prof.d) if am_condition_holds(prof, t))
    if not ts:
        return AMReport(prof, dual_weights, ts)
    code_side, dual_side = _design_assertions(prof, dual_weights, max(ts))
    return AMReport(prof, dual_weights, ts, code_side, dual_side)


@dataclass(frozen=True)
class AMVerification:
    t: int
    checks: tuple[tuple[str, int, DesignCheckResult], ...]

    @property
    def all_confirmed(self) -> bool:
        return all(r.is_design for _, _, r in self.checks)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "all_confirmed": self.all_confirmed,
            "checks": [{"side": side, "weight": w, **r.to_dict()} for side, w, r in self.checks],
        }


def am_designs_verified(code: BinaryCode, t: int, max_dim: int = DEFAULT_MAX_DIM) -> AMVerification:
    """Count every design promised by the theorem for strength ``t``.

    A failed check is returned, not raised; it means the implementation or the
    theorem is wrong and callers should treat it as a hard inconsistency.
    """
    report = am_t_values(code, max_dim)
    if t not in report.t_values:
        raise DomainError(f"t={t} does not satisfy the Assmus-Mattson condition (t values: {list(report.t_values)})")
    code_side, dual_side = _design_assertions(report.profile, report.dual_weights, t)
    dual = dual_code(code)
    checks = []
    for side, c, pairs in (("code", code, code_side), ("dual", dual, dual_side)):
        for w, tt in pairs:
            checks.append((side, w, check_t_design_direct(support_design(c, w, max_dim), tt)))
    return AMVerification(t, tuple(checks))


# ---------------------------------------------------------------- criteria


@dataclass(frozen=True)
class CriterionValue:
    case: Case
    n: int
    d1: int
    d2: int
    t: int
    w: int
    value: Fraction

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def implied_design_weight(self) -> int:
        return 2 * self.w + self.t + (2 if self.case == "four" else 1)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "d1": self.d1,
            "d2": self.d2,
            "t": self.t,
            "w": self.w,
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "is_zero": self.is_zero,
            "implied_design_weight": self.implied_design_weight,
        }


def check_parameters(case: str, n: int, d1: int, d2: int, t: int) -> None:
    if case not in ("four", "five"):
        raise DomainError(f"case must be 'four' or 'five', got {case!r}")
    if case == "five" and n % 2:
        raise DomainError(f"five-weight case needs even n, got n={n}")
    if not 0 < d1 < d2 or not 2 * d2 < n:
        raise DomainError(f"need 0 < d1 < d2 < n/2, got n={n}, d1={d1}, d2={d2}")
    if t < 0 or t + 1 > d1:
        raise DomainError(f"need 0 <= t and t+1 <= d1, got t={t}, d1={d1}")
    if case == "five" and n - 2 * d2 - 2 == 0:
        raise DomainError("degenerate denominator: d2 = n/2 - 1 makes the five-weight formula undefined")


def _alternating_sum(e: int, a: int, w: int, odd: bool) -> int:
    off = 1 if odd else 0
    return sum((-1) ** (w - i) * binom(e, w - i) * binom(a, 2 * i + off) for i in range(w + 1))


def criterion_four(n: int, d1: int, d2: int, t: int, w: int) -> CriterionValue:
    check_parameters("four", n, d1, d2, t)
    if w < 0 or 2 * w + t + 2 > n:
        raise DomainError(f"w={w} out of range: need 0 <= w and 2w+t+2 <= n")
    a, b = n - 2 * d1, n - 2 * d2
    first = _alternating_sum(d1 - (t + 1), a, w, odd=True)
    second = _alternating_sum(d2 - (t + 1), b, w, odd=True)
    return CriterionValue("four", n, d1, d2, t, w, first - Fraction(a, b) * second)


def five_weight_ratios(n: int, d1: int, d2: int) -> tuple[Fraction, Fraction]:
    """(ratio, third-term factor) as printed in the five-weight criterion."""
    a, b = n - 2 * d1, n - 2 * d2
    den = b * (b - 2)
    return Fraction(a * (a - 2), den), Fraction(8 * (d2 - d1) * (n - d1 - d2 - 1), den)


def criterion_five(n: int, d1: int, d2: int, t: int, w: int) -> CriterionValue:
    check_parameters("five", n, d1, d2, t)
    if w < 0 or 2 * w + t + 1 > n:
        raise DomainError(f"w={w} out of range: need 0 <= w and 2w+t+1 <= n")
    a, b = n - 2 * d1, n - 2 * d2
    ratio, third = five_weight_ratios(n, d1, d2)
    first = _alternating_sum(d1 - (t + 1), a, w, odd=False)
    second = _alternating_sum(d2 - (t + 1), b, w, odd=False)
    tail = (-1) ** (w + 1) * binom(n // 2 - (t + 1), w)
    return CriterionValue("five", n, d1, d2, t, w, first - ratio * second + third * tail)


def criterion(case: Case, n: int, d1: int, d2: int, t: int, w: int) -> CriterionValue:
    if case == "four":
        return criterion_four(n, d1, d2, t, w)
    if case == "five":
        return criterion_five(n, d1, d2, t, w)
    raise DomainError(f"case must be 'four' or 'five', got {case!r}")


# ---------------------------------------------------------------- expansion oracle

_X2_MINUS_Y2 = BivariatePoly(2, (1, 0, -1))
_PLUS = BivariatePoly.linear(1, 1)
_MINUS = BivariatePoly.linear(1, -1)


@dataclass(frozen=True)
class ZDualExpansion:
    """Dual harmonic quotient polynomial for a normalized leading coefficient of 1.

    ``p`` holds the coefficients of x^(n-i) y^i in (xy)^(t+1) * Z.
    ``constraints`` maps each y-exponent of Z that must vanish (because the
    dual has no words of the corresponding weight) to its actual value.
    """

    case: Case
    n: int
    d1: int
    d2: int
    t: int
    normalization: str
    a2: Fraction
    b: Fraction | None
    z_poly: BivariatePoly
    p: tuple[Fraction, ...]
    constraints: dict = field(default_factory=dict)

    @property
    def constraints_satisfied(self) -> bool:
        return not any(self.constraints.values())

    @property
    def parity_ok(self) -> bool:
        """Z has only odd y-powers (four) or only even y-powers (five)."""
        bad = 0 if self.case == "four" else 1
        return all(c == 0 for j, c in enumerate(self.z_poly.coeffs) if j % 2 == bad)

    def design_index(self, w: int) -> int:
        return 2 * w + self.t + (2 if self.case == "four" else 1)

    def to_dict(self) -> dict:
        fr = lambda v: f"{v.numerator}/{v.denominator}"  # noqa: E731
        return {
            "case": self.case,
            "n": self.n,
            "d1": self.d1,
            "d2": self.d2,
            "t": self.t,
            "normalization": self.normalization,
            "a1": "1/1",
            "a2": fr(self.a2),
            "b": fr(self.b) if self.b is not None else None,
            "p": [fr(v) for v in self.p],
            "constraints": {str(k): fr(v) for k, v in self.constraints.items()},
            "constraints_satisfied": self.constraints_satisfied,
            "parity_ok": self.parity_ok,
        }


def _components(case: Case, n: int, d1: int, d2: int, t: int) -> list[BivariatePoly]:
    a, b = n - 2 * d1, n - 2 * d2
    e1, e2 = d1 - (t + 1), d2 - (t + 1)
    if case == "four":
        # (x^2-y^2)^e [(x+y)^a - (x-y)^a]: the a'_i and b'_i terms after b'_i = -a'_i
        return [
            _X2_MINUS_Y2**e1 * (_PLUS**a - _MINUS**a),
            _X2_MINUS_Y2**e2 * (_PLUS**b - _MINUS**b),
        ]
    m = n // 2 - (t + 1)
    return [
        _X2_MINUS_Y2**e1 * (_PLUS**a + _MINUS**a),
        _X2_MINUS_Y2**e2 * (_PLUS**b + _MINUS**b),
        _X2_MINUS_Y2**m,
    ]


def zdual_expansion(case: Case, n: int, d1: int, d2: int, t: int, normalization: str = "published") -> ZDualExpansion:
    """Expand the dual quotient polynomial with the leading coefficient set to 1.

    ``normalization="published"`` uses the published closed forms for the other
    coefficients; ``"solved"`` recomputes them by solving the vanishing
    conditions exactly. The two agree in the four-weight case.
    """
    check_parameters(case, n, d1, d2, t)
    comps = _components(case, n, d1, d2, t)
    a, b = n - 2 * d1, n - 2 * d2
    # Z exponents forced to vanish: weight t+2 (four), weights t+1 and t+3 (five)
    vanishing = (1,) if case == "four" else (0, 2)
    if normalization == "published":
        if case == "four":
            coeffs = [Fraction(1), -Fraction(a, b)]
        else:
            ratio, third = five_weight_ratios(n, d1, d2)
            coeffs = [Fraction(1), -ratio, third]
    elif normalization == "solved":
        matrix = [[c.coeffs[j] for c in comps[1:]] for j in vanishing]
        rhs = [-comps[0].coeffs[j] for j in vanishing]
        sol = solve_exact(matrix, rhs)
        if sol is None:
            raise DomainError("vanishing conditions are singular for these parameters")
        coeffs = [Fraction(1), *sol]
    else:
        raise DomainError(f"unknown normalization {normalization!r}")
    z = BivariatePoly.zero(n - 2 * (t + 1))
    for c, comp in zip(coeffs, comps):
        z = z + comp.scale(c)
    p = (Fraction(0),) * (t + 1) + z.coeffs + (Fraction(0),) * (t + 1)
    return ZDualExpansion(
        case,
        n,
        d1,
        d2,
        t,
        normalization,
        coeffs[1],
        coeffs[2] if case == "five" else None,
        z,
        p,
        {j: z.coeffs[j] for j in vanishing},
    )


@dataclass(frozen=True)
class DesignWeightSearch:
    case: Case
    params: tuple[int, int, int, int]
    w_max: int
    zeros: tuple[CriterionValue, ...]
    trivial_zeros: tuple[CriterionValue, ...]
    expansion_zero_ws: tuple[int, ...]

    @property
    def criterion_zero_ws(self) -> tuple[int, ...]:
        return tuple(sorted(c.w for c in self.zeros + self.trivial_zeros))

    @property
    def agrees_with_expansion(self) -> bool:
        return self.criterion_zero_ws == self.expansion_zero_ws

    def to_dict(self) -> dict:
        n, d1, d2, t = self.params
        return {
            "case": self.case,
            "n": n,
            "d1": d1,
            "d2": d2,
            "t": t,
            "w_max": self.w_max,
            "zeros": [c.to_dict() for c in self.zeros],
            "trivial_zeros": [c.to_dict() for c in self.trivial_zeros],
            "expansion_zero_ws": list(self.expansion_zero_ws),
            "agrees_with_expansion": self.agrees_with_expansion,
        }


def valid_w_range(case: Case, n: int, t: int, w_max: int) -> range:
    top = (n - t - (2 if case == "four" else 1)) // 2
    return range(0, min(w_max, top) + 1)


def find_design_weights(case: Case, n: int, d1: int, d2: int, t: int, w_max: int, normalization: str = "published") -> DesignWeightSearch:
    """Scan w = 0..w_max (clipped to valid w) for zeros of the criterion.

    In the four-weight case w = 0 is always a zero and is reported in
    ``trivial_zeros`` rather than ``zeros``.
    """
    check_parameters(case, n, d1, d2, t)
    ws = valid_w_range(case, n, t, w_max)
    values = [criterion(case, n, d1, d2, t, w) for w in ws]
    zeros = [v for v in values if v.is_zero]
    trivial = [v for v in zeros if case == "four" and v.w == 0]
    nontrivial = [v for v in zeros if v not in trivial]
    exp = zdual_expansion(case, n, d1, d2, t, normalization)
    exp_zeros = tuple(w for w in ws if exp.p[exp.design_index(w)] == 0)
    return DesignWeightSearch(case, (n, d1, d2, t), w_max, tuple(nontrivial), tuple(trivial), exp_zeros)


def classify_code(report: AMReport) -> tuple[Case, int, int, int]:
    """(case, d1, d2, t) for a code inside the four/five-weight setting, else DomainError."""
    prof = report.profile
    if report.t is None:
        raise DomainError("code does not satisfy the Assmus-Mattson condition for any t")
    n, t = prof.n, report.t
    gap = prof.d_dual - t
    inner = [u for u in prof.weights if u != n]
    if gap == 4 and len(inner) == 4:
        case: Case = "four"
        d1, d2 = inner[0], inner[1]
        expected = [d1, d2, n - d2, n - d1]
    elif gap == 5 and len(inner) == 5:
        case = "five"
        d1, d2 = inner[0], inner[1]
        expected = [d1, d2, n // 2, n - d2, n - d1]
    else:
        raise DomainError(f"code is not a four/five-weight code with d_dual - t in (4, 5): weights {list(prof.weights)}, d_dual - t = {gap}")
    if inner != expected or (case == "five" and n % 2):
        raise DomainError(f"weights {list(prof.weights)} do not have the required symmetric shape")
    if (prof.d_dual, t) not in ALLOWED_CASES[case]:
        raise DomainError(f"(d_dual, t) = {(prof.d_dual, t)} is outside the known cases for the {case}-weight setting")
    return case, d1, d2, t


def criteria_for_code(code: BinaryCode, w_max: int, max_dim: int = DEFAULT_MAX_DIM) -> DesignWeightSearch:
    report = am_t_values(code, max_dim)
    case, d1, d2, t = classify_code(report)
    return find_design_weights(case, code.n, d1, d2, t, w_max)


def known_case_violation(report: AMReport) -> str | None:
    """Describe a (d_dual, t) pair contradicting the four/five-weight restrictions, if any."""
    for t in report.t_values:
        gap = report.profile.d_dual - t
        case = {4: "four", 5: "five"}.get(gap)
        if case and (report.profile.d_dual, t) not in ALLOWED_CASES[case]:
            return f"d_dual - t = {gap} with (d_dual, t) = {(report.profile.d_dual, t)}"
    return None
