from string import ascii_lowercase
from typing import Iterable, List, Tuple

from pydantic import BaseModel, Field

from ..exceptions import AlphabetError

# Canonical letter order a < A < b < B < ... shared by every alphabet
LETTER_ORDER = "".join(g + g.upper() for g in ascii_lowercase)
_LETTER_INDEX = {letter: i for i, letter in enumerate(LETTER_ORDER)}


def letter_key(letter: str) -> int:
    """Position of a letter in the canonical order"""
    try:
        return _LETTER_INDEX[letter]
    except KeyError:
        raise AlphabetError(f"Unknown symbol {letter!r}")


def word_key(word: str) -> Tuple[int, ...]:
    """Lexicographic key of a word under the canonical letter order"""
    return tuple(letter_key(x) for x in word)


def sort_key(word: str) -> Tuple[int, Tuple[int, ...]]:
    """Serialization order: shorter words first, then lexicographic"""
    return (len(word), word_key(word))


class Alphabet(BaseModel):
    """Generators a, b, ... of F_N paired with their formal inverses A, B, ..."""

    rank: int = Field(..., ge=1, le=26, description="Number of generators (1-26)")

    model_config = {"frozen": True}

    @property
    def generators(self) -> str:
        return ascii_lowercase[: self.rank]

    @property
    def letters(self) -> str:
        """All 2N letters in canonical order"""
        return LETTER_ORDER[: 2 * self.rank]

    def __contains__(self, letter: str) -> bool:
        return letter in _LETTER_INDEX and _LETTER_INDEX[letter] < 2 * self.rank

    def check_word(self, word: str) -> str:
        unknown = set(word).difference(self.letters)
        if unknown:
            raise AlphabetError(
                f"Symbol {min(unknown)!r} is not a letter of the rank {self.rank} alphabet"
            )
        return word

    def require_lamination_rank(self) -> None:
        if self.rank < 2:
            raise AlphabetError("Laminations need an alphabet of rank at least 2")

    def same_as(self, other: "Alphabet") -> None:
        if self.rank != other.rank:
            raise AlphabetError(
                f"Alphabet mismatch: rank {self.rank} against rank {other.rank}"
            )

    @classmethod
    def for_words(cls, words: Iterable[str], minimum: int = 2) -> "Alphabet":
        """Smallest alphabet (of rank at least `minimum`) containing every letter used"""
        rank = minimum
        for word in words:
            for letter in word:
                rank = max(rank, letter_key(letter) // 2 + 1)
        return cls(rank=rank)

    @classmethod
    def from_generators(cls, generators: List[str]) -> "Alphabet":
        """Parse the JSON form ["a", "b", ...]"""
        expected = list(ascii_lowercase[: len(generators)])
        if list(generators) != expected:
            raise AlphabetError(
                f"Generators must be {expected}, got {list(generators)}"
            )
        return cls(rank=len(generators))
