import pytest

from wilfgraph import from_generators


@pytest.fixture(scope="session")
def fig_semigroup():
    """The running 8-generator example with multiplicity 12."""
    return from_generators([12, 13, 14, 15, 17, 19, 20, 21])
