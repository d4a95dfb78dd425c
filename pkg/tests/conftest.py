import pytest

from fuzzywinwin import NegotiationFrame, datasets


@pytest.fixture
def toy_frame():
    return NegotiationFrame(33, 66)


@pytest.fixture
def simple_frame():
    return NegotiationFrame(10, 60)


@pytest.fixture(scope="session")
def oil_ledger():
    return datasets.oil_deal()


@pytest.fixture(scope="session")
def ore_ledger():
    return datasets.iron_ore()
