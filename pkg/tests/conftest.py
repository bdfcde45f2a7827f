import pytest
from hypothesis import settings

from mtlkit.algebra import boolean2, goedel, lukasiewicz, nilpotent_minimum
from mtlkit.constructions import product
from mtlkit.enumeration import chains_upto

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def small_corpus():
    """Chains of order <= 4, two products and a few named chains."""
    return [*chains_upto(4), product(boolean2(), boolean2()),
            product(goedel(3), lukasiewicz(3)), lukasiewicz(5), nilpotent_minimum(5)]


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
