from typing import Dict, FrozenSet, Iterator, List

from pydantic import BaseModel, Field, PrivateAttr, model_validator

from .alphabet import Alphabet, sort_key
from .word import is_reduced


class FactorLanguage(BaseModel):
    """
    A laminary language truncated at a horizon: a finite set of nonempty reduced
    words of length at most `horizon`. `exact` asserts that the set is precisely
    𝓛_horizon of a well-defined lamination; it is set only by the generators and by
    horizon-safe operations.
    """

    alphabet: Alphabet
    horizon: int = Field(..., ge=1, description="Maximal word length carried")
    words: FrozenSet[str]
    exact: bool = False

    model_config = {"frozen": True}

    _by_length: Dict[int, FrozenSet[str]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def validate_words(self):
        for word in self.words:
            if not word:
                raise ValueError("Languages do not contain the empty word")
            if len(word) > self.horizon:
                raise ValueError(
                    f"{word!r} is longer than the horizon {self.horizon}"
                )
            self.alphabet.check_word(word)
            if not is_reduced(word):
                raise ValueError(f"{word!r} is not reduced")
        return self

    def model_post_init(self, __context) -> None:
        index: Dict[int, set] = {}
        for word in self.words:
            index.setdefault(len(word), set()).add(word)
        self._by_length = {k: frozenset(v) for k, v in index.items()}

    def of_length(self, k: int) -> FrozenSet[str]:
        return self._by_length.get(k, frozenset())

    def up_to(self, m: int) -> FrozenSet[str]:
        return frozenset(w for k in range(1, m + 1) for w in self.of_length(k))

    def truncate(self, m: int) -> "FactorLanguage":
        """𝓛_m; exactness survives truncation"""
        if m >= self.horizon:
            return self
        return FactorLanguage(
            alphabet=self.alphabet, horizon=m, words=self.up_to(m), exact=self.exact
        )

    def sorted_words(self) -> List[str]:
        return sorted(self.words, key=sort_key)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __iter__(self) -> Iterator[str]:
        return iter(self.sorted_words())

    def __len__(self) -> int:
        return len(self.words)
