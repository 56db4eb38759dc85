import pytest

from nalg import catalog


@pytest.fixture(scope="session")
def catalog_algebras():
    return {name: catalog.get(name) for name in catalog.ALGEBRA_NAMES}


@pytest.fixture(scope="session")
def catalog_cogebras():
    return {name: catalog.get(name) for name in catalog.COGEBRA_NAMES}
