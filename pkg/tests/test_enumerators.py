import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amdesigns.catalog import catalog_code
from amdesigns.enumerators import (
    BivariatePoly,
    WeightEnumerator,
    antipodal_check,
    expand_sum_difference,
    krawtchouk,
    krawtchouk_recurrence,
    macwilliams_transform,
)
from amdesigns.exceptions import DomainError
from amdesigns.gf2 import weight_distribution


def test_krawtchouk_examples():
    assert all(krawtchouk(0, u, n) == 1 for n in range(1, 9) for u in range(n + 1))
    assert all(krawtchouk(2, 0, n) == comb(n, 2) for n in range(2, 12))
    assert krawtchouk(2, 4, 8) == -4


def test_krawtchouk_matches_polynomial_expansion():
    # coefficient of x^(n-j) y^j in (x+y)^(n-u) (x-y)^u, by multiplication
    for n in range(0, 10):
        for u in range(n + 1):
            poly = expand_sum_difference([0] * u + [1] + [0] * (n - u), n)
            assert [krawtchouk(j, u, n) for j in range(n + 1)] == list(poly.coeffs)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, n))))
def test_krawtchouk_recurrence_and_symmetry(args):
    n, j, u = args
    assert krawtchouk(j, u, n) == krawtchouk_recurrence(j, u, n)
    # reciprocity C(n,u) K_j(u) = C(n,j) K_u(j)
    assert comb(n, u) * krawtchouk(j, u, n) == comb(n, j) * krawtchouk(u, j, n)
    if j % 2 == 0:
        assert krawtchouk(j, u, n) == krawtchouk(j, n - u, n)


def test_macwilliams_examples(e8):
    w = WeightEnumerator(2, (1, 0, 1))
    assert macwilliams_transform(w, 1) == w
    assert macwilliams_transform(WeightEnumerator(5, (1, 0, 0, 0, 0, 0)), 0).coeffs == tuple(comb(5, i) for i in range(6))
    we8 = weight_distribution(e8)
    assert macwilliams_transform(we8, 4) == we8


def test_macwilliams_rejects_non_enumerators():
    with pytest.raises(DomainError, match="not a valid"):
        macwilliams_transform(WeightEnumerator(3, (1, 1, 1, 0)), 1)


def test_macwilliams_is_an_involution_on_hamming():
    h = catalog_code("hamming_7_4")
    w = weight_distribution(h)
    dual = macwilliams_transform(w, 4)
    assert dual.coeffs == (1, 0, 0, 0, 7, 0, 0, 0)
    assert macwilliams_transform(dual, 3) == w


def test_antipodal(e8):
    assert antipodal_check(weight_distribution(e8))
    assert not antipodal_check(WeightEnumerator(3, (1, 1, 0, 0)))
    assert antipodal_check(WeightEnumerator(6, (1, 0, 0, 0, 0, 0, 1)))


def test_weight_enumerator_json_round_trip(golay24):
    w = weight_distribution(golay24)
    text = w.to_json()
    assert all(isinstance(v, str) for v in json.loads(text))
    assert WeightEnumerator.from_json(text) == w
    with pytest.raises(DomainError):
        WeightEnumerator.from_json("{}")


def test_bivariate_substitution_agrees_with_multiplication():
    coeffs = (Fraction(1), Fraction(-2, 3), Fraction(0), Fraction(5))
    p = BivariatePoly(3, coeffs)
    assert p.substitute_sum_difference() == expand_sum_difference(coeffs, 3)
    # applying twice multiplies by 2^degree
    assert p.substitute_sum_difference().substitute_sum_difference() == p.scale(8)


def test_bivariate_arithmetic():
    x_plus_y = BivariatePoly.linear(1, 1)
    assert (x_plus_y**3).coeffs == (1, 3, 3, 1)
    assert (x_plus_y - x_plus_y).is_zero()
    with pytest.raises(DomainError):
        x_plus_y + BivariatePoly.zero(2)
