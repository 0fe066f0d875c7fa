import pytest
from hypothesis import settings

from mxp.core import Presentation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def projective():
    """X={a}, bl(rho) = a a: the projective plane."""
    return Presentation.build(["a"], {"rho": "a a"})


@pytest.fixture
def torus():
    return Presentation.build(["a", "b"], {"rho": "a b a' b'"})


@pytest.fixture
def wedge():
    """X={a,b}, bl(rho) = b: a circle wedged with a disk."""
    return Presentation.build(["a", "b"], {"rho": "b"})


@pytest.fixture
def free_a():
    return Presentation(("a",))


@pytest.fixture
def free_ab():
    return Presentation(("a", "b"))
