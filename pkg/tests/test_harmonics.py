from fractions import Fraction
from itertools import islice
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amdesigns.catalog import STANDARD_CATALOG, catalog_code
from amdesigns.enumerators import BivariatePoly
from amdesigns.exceptions import BudgetExceeded, DomainError
from amdesigns.gf2 import BinaryCode, dual_code
from amdesigns.harmonics import (
    HarmonicFunction,
    bachoc_transform,
    colex_rank,
    colex_subsets,
    harm_basis,
    harm_dimension,
    harm_dimension_formula,
    harmonic_weight_enumerator,
    inclusion_matrix,
    iter_harm_basis,
    tilde_evaluate,
)


def delta_diff(n=2):
    # indicator of {0} minus indicator of {1}
    return HarmonicFunction(n, 1, (((0,), 1), ((1,), -1)))


def test_dimension_examples():
    assert len(harm_basis(4, 0)) == 1
    assert len(harm_basis(4, 1)) == 3
    assert len(harm_basis(4, 2)) == 2


@pytest.mark.parametrize("method", ["tableau", "elimination"])
def test_basis_elements_are_harmonic_and_independent(method):
    for n in range(2, 9):
        for h in range(1, min(n, 4) + 1):
            basis = harm_basis(n, h, method=method)
            assert all(f.is_harmonic() for f in basis)
            assert len(basis) == max(0, harm_dimension_formula(n, h))
            assert len({f.entries for f in basis}) == len(basis)


def test_gamma_checked_on_every_lower_subset():
    f = harm_basis(6, 3)[0]
    dense = f.to_dense()
    for y in colex_subsets(6, 2):
        total = sum(dense[colex_rank(z)] for z in colex_subsets(6, 3) if set(y) <= set(z))
        assert total == 0


def test_rank_dimension_matches_basis_size():
    for n in range(2, 11):
        for h in range(1, min(n, 5) + 1):
            assert harm_dimension(n, h) == max(0, comb(n, h) - comb(n, h - 1))


def test_inclusion_matrix_shape():
    m = inclusion_matrix(4, 2)
    assert (len(m), len(m[0])) == (4, 6)
    assert all(sum(col) == 2 for col in zip(*m))


def test_budget():
    with pytest.raises(BudgetExceeded):
        harm_basis(25, 2)
    with pytest.raises(BudgetExceeded):
        harm_basis(12, 6, method="elimination")
    with pytest.raises(DomainError):
        harm_basis(4, 5)


def test_tilde_evaluate_examples():
    f = HarmonicFunction(3, 1, (((0,), 1), ((1,), -1)))
    assert tilde_evaluate(f, (0, 2)) == 1
    assert tilde_evaluate(f, (0, 1)) == 0
    g = harm_basis(4, 2)[0]
    assert tilde_evaluate(g, (1,)) == 0


def test_small_enumerator_examples():
    f = delta_diff()
    rep = BinaryCode.from_rows(2, ["11"])
    assert harmonic_weight_enumerator(rep, f).w_poly.is_zero()
    c = BinaryCode.from_rows(2, ["10"])
    e = harmonic_weight_enumerator(c, f)
    assert e.w_poly.coeffs == (0, 1, 0)
    assert e.z_poly.coeffs == (1,)
    t = bachoc_transform(e.z_poly, 1, 2)
    assert t.coeffs == (-1,)
    assert harmonic_weight_enumerator(dual_code(c), f).z_poly == t


def test_e8_divisibility(e8):
    for f in harm_basis(8, 4):
        w = harmonic_weight_enumerator(e8, f).w_poly
        assert not any(w.coeffs[:4])


def test_non_harmonic_function_is_rejected(e8):
    bad = HarmonicFunction(8, 2, (((0, 1), 1),))
    with pytest.raises(DomainError):
        harmonic_weight_enumerator(e8, bad)


def test_transform_rejects_non_power_of_two():
    with pytest.raises(DomainError):
        bachoc_transform(BivariatePoly(0, (1,)), 1, 6)


@pytest.mark.parametrize("name", STANDARD_CATALOG)
def test_transform_matches_dual_side(name):
    code = catalog_code(name)
    dual = dual_code(code)
    for h in range(1, 4):
        if 2 * h > code.n:
            break
        for f in harm_basis(code.n, h):
            left = harmonic_weight_enumerator(code, f)
            right = harmonic_weight_enumerator(dual, f)
            assert bachoc_transform(left.z_poly, h, left.code_size) == right.z_poly


def test_golay_degree_six_nontrivial(golay24):
    # weight classes are 5-designs, so degree 5 vanishes; degree 6 does not
    found = 0
    for f in islice(iter_harm_basis(24, 6), 40):
        e = harmonic_weight_enumerator(golay24, f)
        back = bachoc_transform(e.z_poly, 6, e.code_size)
        assert back == e.z_poly  # self-dual, (-1)^6 = +1
        found += not e.z_poly.is_zero()
    assert found > 0


def test_golay_degree_five_up_to_sign(golay24):
    for f in islice(iter_harm_basis(24, 5), 30):
        z = harmonic_weight_enumerator(golay24, f).z_poly
        assert bachoc_transform(z, 5, 4096) == z.scale(-1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.lists(st.fractions(max_denominator=20), min_size=7, max_size=7), st.integers(0, 4))
def test_double_transform_is_identity(h, coeffs, k):
    n = 6 + 2 * h
    z = BivariatePoly(6, tuple(Fraction(c) for c in coeffs))
    once = bachoc_transform(z, h, 1 << k)
    assert bachoc_transform(once, h, 1 << (n - k)) == z


def test_json_round_trip():
    for f in harm_basis(6, 2, method="elimination"):
        g = HarmonicFunction.from_json(f.to_json())
        assert g == f
        assert all("/" in v for _, v in f.to_dict()["entries"])
