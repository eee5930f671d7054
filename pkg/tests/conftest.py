import pytest

from xtoplat.enumeration import all_lattices_upto, all_posets_upto


@pytest.fixture(scope="session")
def posets_upto_5():
    return all_posets_upto(5)


@pytest.fixture(scope="session")
def posets_upto_6():
    return all_posets_upto(6)


@pytest.fixture(scope="session")
def lattices_upto_5():
    return all_lattices_upto(5)


@pytest.fixture(scope="session")
def lattices_upto_6():
    return all_lattices_upto(6)
