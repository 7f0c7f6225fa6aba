import pytest

from g31.build import G31Context


@pytest.fixture(scope="session")
def ctx() -> G31Context:
    """One shared build context; the heavy closures are cached on it."""
    return G31Context()
