import pytest

from eulerprod import sieve


@pytest.fixture(scope="session")
def table_1e2():
    return sieve(10**2)


@pytest.fixture(scope="session")
def table_1e3():
    return sieve(10**3)


@pytest.fixture(scope="session")
def table_1e4():
    return sieve(10**4)


@pytest.fixture(scope="session")
def table_1e5():
    return sieve(10**5)


@pytest.fixture(scope="session")
def table_1e6():
    return sieve(10**6)
