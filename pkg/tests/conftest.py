import pytest

from unicyc import enumerate_unicyclic


@pytest.fixture(scope="session")
def classes_by_n():
    """One representative per unicyclic isomorphism class, n = 3..8."""
    return {n: tuple(enumerate_unicyclic(n)) for n in range(3, 9)}
