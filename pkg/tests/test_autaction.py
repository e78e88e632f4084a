import random

import pytest

from lamina.autaction import (
    act,
    chop_constant,
    composition_horizon,
    norm,
    source_horizon,
    verify_composition,
)
from lamina.exceptions import ActionError, AlphabetError, HorizonError, LanguageError
from lamina.langkit import close, is_laminary_at
from lamina.lamgen import rational
from lamina.models import Automorphism, cyclic_reduce, cyclic_words, reduced_words
from lamina.workbench import sample_automorphisms


@pytest.fixture
def fibonacci_automorphism():
    return Automorphism.from_rules("a:ab,b:a", "a:b,b:Ba")


def acted_rational(alpha, w, n):
    return act(alpha, rational(w, source_horizon(alpha, n)), n)


def test_norm(right_multiplication, rank2):
    assert norm(right_multiplication) == 2
    assert norm(Automorphism.identity(rank2)) == 1


def test_chop_constant(rank2, right_multiplication):
    assert chop_constant(Automorphism.identity(rank2)) == 2
    assert chop_constant(right_multiplication) == 4


def test_source_horizon(rank2, right_multiplication):
    assert source_horizon(Automorphism.identity(rank2), 3) == 11
    assert source_horizon(right_multiplication, 3) == 28


class TestExamples:
    def test_identity(self, rank2):
        identity = Automorphism.identity(rank2)
        assert acted_rational(identity, "ab", 3).words == rational("ab", 3).words

    def test_right_multiplication(self, right_multiplication):
        result = acted_rational(right_multiplication, "a", 3)
        assert result.words == rational("ab", 3).words
        assert result.exact
        assert result.horizon == 3

    def test_inner_automorphism_fixes_every_lamination(self, rank2):
        inner = Automorphism.inner(rank2, "b")
        for w in ("a", "aB", "aab"):
            assert acted_rational(inner, w, 3).words == rational(w, 3).words

    def test_swap(self, rank2):
        swap = Automorphism.from_rules("a:b,b:a", "a:b,b:a")
        assert acted_rational(swap, "aab", 4).words == rational("bba", 4).words


class TestErrors:
    def test_needs_an_automorphism(self, fibonacci_map):
        with pytest.raises(ActionError):
            act(fibonacci_map, rational("a", 40), 2)

    def test_needs_an_exact_language(self, right_multiplication):
        with pytest.raises(LanguageError):
            act(right_multiplication, close(["ab"], 40), 2)

    def test_source_horizon_too_small(self, right_multiplication):
        with pytest.raises(HorizonError):
            act(right_multiplication, rational("a", 27), 3)
        with pytest.raises(HorizonError):
            act(right_multiplication, rational("a", 40), 0)

    def test_alphabet_mismatch(self, right_multiplication):
        with pytest.raises(AlphabetError):
            act(right_multiplication, rational("c", 40), 2)


def test_images_of_rational_laminations(fibonacci_automorphism):
    for w in ("a", "ab", "aBB", "abAB"):
        core, _, _ = cyclic_reduce(fibonacci_automorphism.apply(w))
        result = acted_rational(fibonacci_automorphism, w, 3)
        assert result.words == rational(core.word, 3).words
        assert is_laminary_at(result)


def test_invertibility(fibonacci_automorphism):
    inverse = fibonacci_automorphism.inverse()
    n = 3
    forward = acted_rational(fibonacci_automorphism, "aB", source_horizon(inverse, n))
    assert act(inverse, forward, n).words == rational("aB", n).words


def test_insensitive_to_a_larger_chop_constant(right_multiplication):
    n = 3
    constant = 2 * chop_constant(right_multiplication)
    language = rational("aab", source_horizon(right_multiplication, n, constant))
    assert (
        act(right_multiplication, language, n, constant=constant).words
        == act(right_multiplication, language, n).words
    )


def test_composition(right_multiplication, fibonacci_automorphism):
    n = 2
    horizon = composition_horizon(right_multiplication, fibonacci_automorphism, n)
    for w in ("ab", "aBB"):
        assert verify_composition(
            right_multiplication, fibonacci_automorphism, rational(w, horizon), n
        )


def test_random_automorphisms_act_on_rational_laminations():
    for alpha, _ in sample_automorphisms(5, 3, seed=7):
        core, _, _ = cyclic_reduce(alpha.apply("aab"))
        assert acted_rational(alpha, "aab", 2).words == rational(core.word, 2).words


@pytest.mark.slow
def test_composition_of_random_automorphisms():
    samples = sample_automorphisms(6, 6, seed=11)
    for (alpha, _), (beta, _) in zip(samples, samples[1:]):
        horizon = composition_horizon(alpha, beta, 2)
        assert verify_composition(alpha, beta, rational("aaB", horizon), 2)


@pytest.mark.slow
def test_composition_on_the_fibonacci_lamination(fibonacci, right_multiplication):
    swap = Automorphism.from_rules("a:b,b:a", "a:b,b:a")
    horizon = composition_horizon(right_multiplication, swap, 1)
    assert verify_composition(right_multiplication, swap, fibonacci(horizon), 1)


@pytest.fixture
def sampled_words(rank2):
    """20 cyclic words of length ≤ 6, the same on every run"""
    words = [w.word for w in cyclic_words(rank2, 6)]
    return random.Random(5).sample(words, 20)


@pytest.mark.slow
def test_sampled_automorphisms_act_as_on_words(sampled_words):
    for alpha, _ in sample_automorphisms(100, 6, seed=13):
        for w in sampled_words:
            core, _, _ = cyclic_reduce(alpha.apply(w))
            assert acted_rational(alpha, w, 4).words == rational(core.word, 4).words


@pytest.mark.slow
def test_sampled_inner_automorphisms_act_trivially(rank2, sampled_words):
    rng = random.Random(17)
    conjugators = rng.sample(list(reduced_words(rank2, 3)), 20)
    for g in conjugators:
        inner = Automorphism.inner(rank2, g)
        for w in rng.sample(sampled_words, 3):
            assert acted_rational(inner, w, 4).words == rational(w, 4).words


@pytest.mark.slow
def test_sampled_round_trips(sampled_words):
    # three moves keep the nested source horizons small
    n = 4
    for i, (alpha, _) in enumerate(sample_automorphisms(100, 3, seed=19)):
        inverse = alpha.inverse()
        w = sampled_words[i % len(sampled_words)]
        forward = acted_rational(alpha, w, source_horizon(inverse, n))
        assert act(inverse, forward, n).words == rational(w, n).words


@pytest.mark.slow
def test_composition_on_sampled_pairs(sampled_words):
    n = 4
    samples = sample_automorphisms(200, 3, seed=23)
    for i, ((alpha, _), (beta, _)) in enumerate(zip(samples[::2], samples[1::2])):
        w = sampled_words[i % len(sampled_words)]
        horizon = composition_horizon(alpha, beta, n)
        assert verify_composition(alpha, beta, rational(w, horizon), n)
