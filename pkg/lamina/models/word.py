"""
Reduced words over the involutive alphabet, written in the ASCII encoding:
lowercase letters are generators, uppercase letters their inverses ("A" = a⁻¹).
"""

import re
from typing import Iterator, NewType, Optional, Set, Tuple

from pydantic import BaseModel, field_validator

from .alphabet import LETTER_ORDER, Alphabet, letter_key, word_key

# A freely reduced word; the empty string is the identity
ReducedWord = NewType("ReducedWord", str)

_CANCELLING = re.compile("|".join(x + x.swapcase() for x in LETTER_ORDER))


def inverse_letter(letter: str) -> str:
    return letter.swapcase()


def invert(word: str) -> ReducedWord:
    """Formal inverse: reverse the word and invert every letter"""
    return ReducedWord(word[::-1].swapcase())


def is_reduced(word: str) -> bool:
    return _CANCELLING.search(word) is None


def is_cyclically_reduced(word: str) -> bool:
    return is_reduced(word) and (len(word) < 2 or word[0] != word[-1].swapcase())


def reduce(raw: str, alphabet: Optional[Alphabet] = None) -> ReducedWord:
    """Freely reduce a letter sequence"""
    if alphabet is not None:
        alphabet.check_word(raw)
    stack = []
    for letter in raw:
        letter_key(letter)
        if stack and stack[-1] == letter.swapcase():
            stack.pop()
        else:
            stack.append(letter)
    return ReducedWord("".join(stack))


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> ReducedWord:
    """Parse user input; "1" and "" denote the identity"""
    text = text.strip()
    if text in ("", "1"):
        return ReducedWord("")
    return reduce(text, alphabet)


def concat(u: str, v: str) -> Tuple[ReducedWord, int]:
    """Reduced product uv together with the number of letters cancelled on each side"""
    k = 0
    while k < len(u) and k < len(v) and v[k] == u[-1 - k].swapcase():
        k += 1
    return ReducedWord(u[: len(u) - k] + v[k:]), k


def common_prefix_length(u: str, v: str) -> int:
    k = 0
    while k < len(u) and k < len(v) and u[k] == v[k]:
        k += 1
    return k


def primitive_root(word: str) -> str:
    """Shortest p with word = p^k"""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def rotations(word: str) -> Iterator[str]:
    for i in range(len(word)):
        yield word[i:] + word[:i]


def factors(word: str, n: int) -> Set[str]:
    """Nonempty subwords of length at most n"""
    found = set()
    if len(word) <= n:
        for i in range(len(word)):
            for j in range(i + 1, len(word) + 1):
                found.add(word[i:j])
        return found
    # every shorter factor is a prefix of a length-n window, or lies in the last one
    windows = {word[i : i + n] for i in range(len(word) - n + 1)}
    for window in windows:
        for k in range(1, n + 1):
            found.add(window[:k])
    last = word[-n:]
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            found.add(last[i:j])
    return found


class CyclicWord(BaseModel):
    """A conjugacy class, kept with the representative rotation it was built from"""

    word: str

    model_config = {"frozen": True}

    @field_validator("word")
    @classmethod
    def validate_cyclically_reduced(cls, v):
        if not v:
            raise ValueError("A cyclic word must be nonempty")
        word_key(v)
        if not is_cyclically_reduced(v):
            raise ValueError(f"{v!r} is not cyclically reduced")
        return v

    @property
    def canonical(self) -> str:
        """Least rotation under the letter order"""
        return min(rotations(self.word), key=word_key)

    @property
    def canonical_up_to_inversion(self) -> str:
        return min(self.canonical, self.inverse().canonical, key=word_key)

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(word=invert(self.word))

    def is_primitive(self) -> bool:
        return primitive_root(self.word) == self.word

    def same_class_up_to_inversion(self, other: "CyclicWord") -> bool:
        return self.canonical_up_to_inversion == other.canonical_up_to_inversion

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __str__(self) -> str:
        return self.word


def cyclic_reduce(word: str) -> Tuple[Optional[CyclicWord], ReducedWord, int]:
    """Write w = g·core·g⁻¹ with core cyclically reduced; returns (core, g, |g|)"""
    word = reduce(word)
    r = 0
    while 2 * r + 1 < len(word) and word[r] == word[-1 - r].swapcase():
        r += 1
    conjugator = ReducedWord(word[:r])
    if not word:
        return None, conjugator, 0
    return CyclicWord(word=word[r : len(word) - r]), conjugator, r


def reduced_words(alphabet: Alphabet, max_len: int) -> Iterator[str]:
    """Every nonempty reduced word of length ≤ max_len, shortest first, in letter order"""
    layer = [""]
    for _ in range(max_len):
        layer = [
            w + x for w in layer for x in alphabet.letters if not w or w[-1] != x.swapcase()
        ]
        yield from layer


def cyclic_words(alphabet: Alphabet, max_len: int) -> Iterator[CyclicWord]:
    """One cyclically reduced representative per class up to rotation and inversion"""
    seen = set()
    for w in reduced_words(alphabet, max_len):
        if not is_cyclically_reduced(w):
            continue
        cyclic = CyclicWord(word=w)
        key = cyclic.canonical_up_to_inversion
        if key not in seen:
            seen.add(key)
            yield CyclicWord(word=key)
