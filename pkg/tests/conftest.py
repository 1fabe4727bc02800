import pytest

from amdesigns.catalog import catalog_code


@pytest.fixture(scope="session")
def e8():
    return catalog_code("ext_hamming_8_4")


@pytest.fixture(scope="session")
def golay24():
    return catalog_code("ext_golay_24_12")
