import pytest

from guinand import parse

# canonical odd suite: {t, t^3, t^5 - t} x Gaussian scales {1/2, 1, 2}
ODD_SUITE = [
    f"{p}*exp(-pi*{a}*t^2)"
    for p in ("t", "t^3", "(t^5-t)")
    for a in ("1/2", "1", "2")
]

# canonical even suite for the radial transform oracle checks
EVEN_SUITE = [
    f"{p}*exp(-pi*{a}*t^2)"
    for p in ("1", "t^2", "(t^4-t^2)")
    for a in ("1/2", "1", "2")
]


@pytest.fixture(scope="session")
def odd_suite():
    return [parse(src).value for src in ODD_SUITE]


@pytest.fixture(scope="session")
def even_suite():
    return [parse(src).value for src in EVEN_SUITE]
