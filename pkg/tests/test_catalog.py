import pytest

from amdesigns.catalog import STANDARD_CATALOG, catalog_code, reed_muller
from amdesigns.exceptions import DomainError
from amdesigns.gf2 import code_profile, dual_code


# (n, k, d, d_dual) by standard theory
EXPECTED = {
    "hamming_7_4": (7, 4, 3, 4),
    "ext_hamming_8_4": (8, 4, 4, 4),
    "golay_23_12": (23, 12, 7, 8),
    "ext_golay_24_12": (24, 12, 8, 8),
    "rm(0,3)": (8, 1, 8, 2),
    "rm(1,3)": (8, 4, 4, 4),
    "rm(1,4)": (16, 5, 8, 4),
    "rm(2,4)": (16, 11, 4, 8),
    "repetition_2": (2, 1, 2, 2),
    "repetition_5": (5, 1, 5, 2),
    "even_weight_6": (6, 5, 2, 6),
}


@pytest.mark.parametrize("name", STANDARD_CATALOG)
def test_catalog_parameters(name):
    p = code_profile(catalog_code(name))
    assert (p.n, p.k, p.d, p.d_dual) == EXPECTED[name]


def test_reed_muller_duality():
    # RM(r, m) dual is RM(m - r - 1, m)
    assert dual_code(reed_muller(1, 4)) == reed_muller(2, 4)
    assert dual_code(reed_muller(1, 3)) == reed_muller(1, 3)


def test_name_variants():
    assert catalog_code("rm_1_3") == catalog_code("rm(1,3)")
    assert catalog_code("RM(1, 3)") == catalog_code("rm(1,3)")
    with pytest.raises(DomainError):
        catalog_code("repetition_0")
    with pytest.raises(DomainError):
        catalog_code("rm(3,2)")
