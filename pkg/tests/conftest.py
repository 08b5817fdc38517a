import pytest
from hypothesis import settings

from foxpoly import Presentation

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

EXAMPLE = "a,b|AbaBAbaBBAbabABBab"


@pytest.fixture
def example():
    return Presentation.parse(EXAMPLE)
