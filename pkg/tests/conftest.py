import pytest

from eisenstats import build_tables

# Published 5-decimal constants (alpha, beta, gamma, mu, sigma_sq,
# sigma_sq_hat) for d = 2..6; alpha doubles as mu_hat.
TABLE1 = {
    2: (0.17971, 0.00731, 0.16765, 1.07192, 0.07187, 0.17239),
    3: (0.05653, 0.00127, 0.05557, 1.01714, 0.01705, 0.05525),
    4: (0.02255, 0.00027, 0.02243, 1.00519, 0.00517, 0.02227),
    5: (0.00989, 0.00006, 0.00988, 1.00169, 0.00169, 0.00983),
    6: (0.00456, 0.00001, 0.00456, 1.00056, 0.00056, 0.00454),
}

# "Within one unit in the last (5th) decimal place", with a hair of float
# headroom so equality at exactly 1e-5 cannot flake.
ULP5 = 1.0e-5 + 1.0e-9


@pytest.fixture(scope="session")
def tables10k():
    return build_tables(10**4)


@pytest.fixture(scope="session")
def tables1m():
    return build_tables(10**6)


@pytest.fixture(scope="session")
def tables10m():
    return build_tables(10**7)
