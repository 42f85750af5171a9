import pytest

from sylvester.comet import goldbach_counts, twin_prime_constant
from sylvester.primes import build_table

SMALL_LIMIT = 1_000_000
COMET_LIMIT = 4_000_200


@pytest.fixture(scope="session")
def small_table():
    return build_table(SMALL_LIMIT)


@pytest.fixture(scope="session")
def comet_table():
    return build_table(COMET_LIMIT)


@pytest.fixture(scope="session")
def comet_counts(comet_table):
    return goldbach_counts(COMET_LIMIT // 2, comet_table)


@pytest.fixture(scope="session")
def c_value(small_table):
    # 10**4 odd primes pin c to about 1e-5, plenty for the comet bands
    return twin_prime_constant(10_000, small_table).value
