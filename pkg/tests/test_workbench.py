import math
import random

import pytest

from lamina import config
from lamina.exceptions import AlphabetError, HorizonError, LanguageError
from lamina.langkit import LanguageDistance, close, equal_at
from lamina.lamgen import rational
from lamina.schemas import LanguageRecipe
from lamina.workbench import (
    approximants,
    converge_check,
    nielsen_move,
    random_automorphism,
    rauzy_export,
    rauzy_graph,
    repro,
    repro_fixedpoint,
    repro_limitset,
    repro_notdense,
    sample_automorphisms,
)

FIBONACCI = LanguageRecipe(kind="subst", rules="a:ab,b:a", seed="a")


class TestNielsen:
    def test_moves(self, rank2):
        assert nielsen_move(rank2, "right", "a", "b").apply("a") == "ab"
        assert nielsen_move(rank2, "left", "a", "b").apply("a") == "ba"
        assert nielsen_move(rank2, "invert", "b", "a").apply("ab") == "aB"
        assert nielsen_move(rank2, "swap", "a", "b").apply("aab") == "bba"

    def test_moves_carry_their_inverse(self, rank2):
        for kind in ("right", "left", "invert", "swap"):
            move = nielsen_move(rank2, kind, "a", "b")
            assert move.inverse().apply(move.apply("aBAb")) == "aBAb"

    def test_bad_moves(self, rank2):
        with pytest.raises(AlphabetError):
            nielsen_move(rank2, "right", "a", "a")
        with pytest.raises(ValueError):
            nielsen_move(rank2, "twist", "a", "b")

    def test_empty_product_is_the_identity(self, rank2):
        alpha, labels = random_automorphism(rank2, 0, random.Random(0))
        assert labels == []
        assert alpha.apply("abAB") == "abAB"

    def test_sampling_is_reproducible(self):
        first = sample_automorphisms(4, 3, seed=42)
        second = sample_automorphisms(4, 3, seed=42)
        assert [a.describe() for a, _ in first] == [a.describe() for a, _ in second]
        assert all(1 <= len(labels) <= 3 for _, labels in first)


class TestRauzy:
    def test_rational_language(self):
        graph = rauzy_graph(rational("ab", 3), 1)
        assert graph.number_of_nodes() == 4
        assert set(graph.edges) == {("a", "b"), ("b", "a"), ("A", "B"), ("B", "A")}

    def test_powers_give_self_loops(self):
        graph = rauzy_graph(rational("a", 4), 2)
        assert set(graph.edges) == {("aa", "aa"), ("AA", "AA")}

    def test_edges_are_the_longer_words(self, fibonacci):
        language = fibonacci(6)
        for k in range(1, 6):
            graph = rauzy_graph(language, k)
            assert graph.number_of_nodes() == len(language.of_length(k))
            assert graph.number_of_edges() == len(language.of_length(k + 1))

    def test_level_bounds(self):
        with pytest.raises(HorizonError):
            rauzy_graph(rational("ab", 3), 0)
        with pytest.raises(HorizonError):
            rauzy_graph(rational("ab", 3), 3)

    def test_dot_export(self):
        dot = rauzy_export(rational("ab", 3), 1)
        assert dot.startswith("digraph rauzy_1")
        assert "a -> b" in dot


class TestConvergence:
    def test_least_index(self):
        sequence = [rational("a", 3), rational("ab", 3), rational("ab", 5)]
        assert converge_check(sequence, rational("ba", 4), 3) == 1

    def test_no_convergence(self):
        sequence = [rational("ab", 3), rational("a", 3)]
        assert converge_check(sequence, rational("ab", 3), 3) is None

    def test_needs_exact_languages(self):
        with pytest.raises(LanguageError):
            converge_check([close(["ab"], 3)], rational("ab", 3), 2)

    def test_approximants_converge(self, fibonacci):
        words = approximants(FIBONACCI, 3)
        sequence = [rational(w.word, 3) for w in words]
        assert converge_check(sequence, fibonacci(3), 3) in (0, 1, 2)


class TestNotDense:
    def test_every_rational_lamination_fails(self):
        report = repro_notdense(2, 4)
        assert report.all_fail
        assert [row.word for row in report.rows][:6] == ["a", "b", "aa", "ab", "aB", "bb"]
        assert all(row.distinguishing for row in report.rows)

    def test_distinguishing_words(self):
        rows = {row.word: row for row in repro_notdense(2, 2).rows}
        assert rows["a"].distinguishing == "ab"
        assert not rows["a"].missing_from_ends
        assert rows["ab"].distinguishing == "ba"
        assert rows["ab"].missing_from_ends

    def test_single_letters(self):
        report = repro_notdense(2, 1)
        assert [row.word for row in report.rows] == ["a", "b"]
        assert report.all_fail

    def test_needs_length_two(self):
        with pytest.raises(HorizonError):
            repro_notdense(1, 4)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3])
    def test_every_cyclic_word_up_to_length_ten(self, n):
        report = repro_notdense(n, 10)
        assert report.all_fail
        assert all(row.distinguishing for row in report.rows)


class TestLimitSet:
    def test_fibonacci(self, fibonacci):
        report = repro_limitset(FIBONACCI, 3)
        assert report.passed
        for row in report.rows:
            assert row.certified
            assert row.bound == pytest.approx(math.exp(-((row.m - 1) // 2)))
            assert equal_at(rational(row.approximant, row.m), fibonacci(row.m), row.m)

    def test_rational_recipes(self):
        assert repro_limitset(LanguageRecipe(kind="rational", word="aab"), 2).passed
        assert repro_limitset(LanguageRecipe(kind="rational", word="ab"), 4).passed
        report = repro_limitset(LanguageRecipe(kind="rational", word="a"), 3)
        assert report.passed
        assert all(set(row.approximant) == {"a"} for row in report.rows)

    def test_non_minimal_language_is_not_certified(self, monkeypatch):
        monkeypatch.setattr(config, "HORIZON_LIMIT", 24)
        report = repro_limitset(LanguageRecipe(kind="ends", left="a", right="b"), 1)
        assert not report.passed
        assert report.rows[0].detail
        assert report.rows[0].approximant is None

    @pytest.mark.slow
    def test_fibonacci_up_to_five(self, fibonacci):
        report = repro_limitset(FIBONACCI, 5)
        assert report.passed
        assert [row.m for row in report.rows] == [1, 2, 3, 4, 5]
        for row in report.rows:
            assert row.certified
            assert equal_at(rational(row.approximant, row.m), fibonacci(row.m), row.m)


class TestFixedPoint:
    def test_commutator_lamination_is_fixed(self):
        report = repro_fixedpoint(3, 2, seed=5, workers=1)
        assert report.passed
        assert len(report.rows) == 3
        for row in report.rows:
            assert row.preserved
            assert row.separating_word is not None
            assert row.distance == 1.0

    def test_identity(self):
        row = repro_fixedpoint(1, 0, seed=0, workers=1).rows[0]
        assert row.moves == []
        assert row.image == "ABab"
        assert row.separating_word == "ab"
        assert row.passed

    def test_capped_distance_does_not_certify(self, monkeypatch):
        monkeypatch.setattr(
            repro,
            "distance",
            lambda left, right: LanguageDistance(value=1.0, agreement=0, capped=True),
        )
        row = repro_fixedpoint(1, 0, seed=0, workers=1).rows[0]
        assert row.preserved
        assert row.distance == 1.0
        assert not row.passed

    @pytest.mark.slow
    def test_full_run(self):
        assert repro_fixedpoint(100, 6, seed=0, workers=1).passed
