import pytest

from monocurve import make_params


@pytest.fixture(scope="session")
def p713():
    return make_params(7, 1, 3)


@pytest.fixture(scope="session")
def p832():
    return make_params(8, 3, 2)


@pytest.fixture(scope="session")
def p613():
    # b = p case: index ranges for the power binomials degenerate
    return make_params(6, 1, 3)
