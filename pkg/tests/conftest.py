import pytest

from ulrich_kit.cli.corpus import load_corpus


@pytest.fixture(scope="session")
def sec6():
    return load_corpus("sec6").build()


@pytest.fixture(scope="session")
def curve():
    """K[[x,y]]/(x^2 + y^4) with I = (x, y^2), Q = (x)."""
    return load_corpus("ex2.6ii-d1s2").build()
