import math

import pytest
from pydantic import ValidationError

from lamina.exceptions import WordError
from lamina.models import (
    BiinfiniteWordSpec,
    BoundaryPoint,
    biinfinite_distance,
    boundary_distance,
    central_factors,
    common_prefix,
    cyclic_reduce,
    infinity_word,
    invert,
    periodic_spec,
    reduce,
    reduced_words,
)


class TestBoundaryPoint:
    def test_canonical_form(self):
        assert BoundaryPoint(prefix="a", period="a") == BoundaryPoint(period="a")
        assert BoundaryPoint(period="abab").period == "ab"
        assert BoundaryPoint(prefix="bab", period="ab") == BoundaryPoint(prefix="b", period="ab")

    def test_rejects_cancelling_junction(self):
        with pytest.raises(ValidationError):
            BoundaryPoint(prefix="A", period="a")
        with pytest.raises(ValidationError):
            BoundaryPoint(period="abA")

    def test_head_and_tail(self):
        x = BoundaryPoint(prefix="a", period="b")
        assert x.head(3) == "abb"
        assert x.tail(1) == BoundaryPoint(period="b")
        assert BoundaryPoint(period="ab").tail(3) == BoundaryPoint(period="ba")

    def test_infinity_words(self):
        assert infinity_word("ab") == BoundaryPoint(period="ab")
        assert infinity_word("ab", -1) == BoundaryPoint(period="BA")
        assert infinity_word("baB") == BoundaryPoint(prefix="b", period="a")
        with pytest.raises(WordError):
            infinity_word("")

    def test_distance(self):
        x = BoundaryPoint(period="a")
        assert boundary_distance(x, x) == 0
        assert boundary_distance(x, BoundaryPoint(period="b")) == 1
        assert boundary_distance(
            BoundaryPoint(prefix="a", period="b"), x
        ) == pytest.approx(math.exp(-1))
        assert common_prefix(x, x) == -1

    def test_infinity_words_are_periodic(self, rank2):
        for w in reduced_words(rank2, 6):
            _, conjugator, _ = cyclic_reduce(w)
            cubed = reduce(w * 3)
            # w³ = g·c³·g⁻¹ is the head of g·c^∞ followed by g⁻¹
            length = len(cubed) - len(conjugator)
            assert infinity_word(w).head(length) == cubed[:length]
            assert infinity_word(w, -1) == infinity_word(invert(w))


class TestBiinfiniteWord:
    def test_central_subwords(self, two_ended):
        assert central_factors(two_ended, 0) == "a"
        assert central_factors(two_ended, 1) == "aab"
        assert central_factors(two_ended, 2) == "aaabb"

    def test_periodic_spec_centering(self):
        spec = periodic_spec("ab")
        assert central_factors(spec, 0) == "a"
        assert central_factors(spec, 1) == "bab"
        assert periodic_spec("baB") == periodic_spec("a")

    def test_rejects_cancelling_junction(self):
        with pytest.raises(ValidationError):
            BiinfiniteWordSpec(left_period="a", center="A", right_period="b")
        with pytest.raises(ValidationError):
            BiinfiniteWordSpec(left_period="a", right_period="A")

    def test_shift(self, two_ended):
        shifted = two_ended.shift(1)
        assert all(shifted.letter(i) == two_ended.letter(i + 1) for i in range(-5, 6))
        assert biinfinite_distance(two_ended, shifted) == 1

    def test_inverse(self, two_ended):
        inverse = two_ended.inverse()
        assert all(
            inverse.letter(i) == two_ended.letter(1 - i).swapcase() for i in range(-5, 6)
        )
        assert inverse.inverse() == two_ended

    def test_ends(self, two_ended):
        minus, plus = two_ended.ends()
        assert minus == BoundaryPoint(period="A")
        assert plus == BoundaryPoint(period="b")
        minus, plus = BiinfiniteWordSpec(
            left_period="a", center="ba", right_period="b", origin=1
        ).ends()
        assert plus == BoundaryPoint(prefix="a", period="b")
        assert minus == BoundaryPoint(prefix="B", period="A")

    def test_distance(self, two_ended):
        assert biinfinite_distance(two_ended, two_ended) == 0
        other = BiinfiniteWordSpec(left_period="a", center="bb", right_period="a")
        assert biinfinite_distance(two_ended, other) == pytest.approx(math.exp(-2))
