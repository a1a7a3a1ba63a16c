import numpy as np
import pytest

from sbmpot import bernstein


@pytest.fixture(scope="session")
def catalog():
    return bernstein.default_catalog()


@pytest.fixture(scope="session")
def stable_half():
    return bernstein.stable(0.5)


@pytest.fixture(scope="session")
def stable_one():
    return bernstein.stable(1.0)


@pytest.fixture(scope="session")
def stable_three_half():
    return bernstein.stable(1.5)


@pytest.fixture(scope="session")
def lam_grid():
    return np.geomspace(1e-2, 1e4, 40)
