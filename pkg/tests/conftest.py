import pytest

from lamina.lamgen import from_ends, from_substitution
from lamina.models import Alphabet, Automorphism, BiinfiniteWordSpec, Endomorphism


@pytest.fixture
def rank2():
    return Alphabet(rank=2)


@pytest.fixture
def fibonacci_map():
    """a ↦ ab, b ↦ a"""
    return Endomorphism.from_rules("a:ab,b:a")


@pytest.fixture
def fibonacci(fibonacci_map):
    """Factory for the exact Fibonacci language at any horizon"""

    def build(horizon):
        return from_substitution(fibonacci_map, "a", horizon)

    return build


@pytest.fixture
def two_ended():
    return BiinfiniteWordSpec(left_period="a", right_period="b")


@pytest.fixture
def ends_language(two_ended):
    def build(horizon):
        return from_ends(two_ended, horizon)

    return build


@pytest.fixture
def right_multiplication():
    """a ↦ ab with inverse a ↦ aB"""
    return Automorphism.from_rules("a:ab,b:b", "a:aB,b:b")
