import pytest

from hopfcyc import zoo


@pytest.fixture(scope="session")
def z2():
    return zoo.group_algebra(2)


@pytest.fixture(scope="session")
def field_hopf():
    return zoo.trivial_hopf()


@pytest.fixture(scope="session")
def R2():
    return zoo.diagonal(2)


@pytest.fixture(scope="session")
def K2(R2):
    from hopfcyc.bialgebroid import enveloping_left
    return enveloping_left(R2)


@pytest.fixture(scope="session")
def crossed():
    return zoo.crossed_z2_data()


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweeps")
