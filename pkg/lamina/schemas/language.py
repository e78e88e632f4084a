from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Literal, Optional

from ..lamgen import from_ends, from_substitution, rational
from ..models import (
    Alphabet,
    BiinfiniteWordSpec,
    Endomorphism,
    FactorLanguage,
    parse_word,
    sort_key,
)


class LanguageFile(BaseModel):
    """JSON form of a FactorLanguage; words are listed shortest first, then lexicographically"""

    alphabet: List[str] = Field(..., description='Generators, e.g. ["a", "b"]')
    horizon: int = Field(..., ge=1, description="Maximal word length carried")
    exact: bool = False
    words: List[str]

    @classmethod
    def from_language(cls, language: FactorLanguage) -> "LanguageFile":
        return cls(
            alphabet=list(language.alphabet.generators),
            horizon=language.horizon,
            exact=language.exact,
            words=language.sorted_words(),
        )

    def to_language(self) -> FactorLanguage:
        return FactorLanguage(
            alphabet=Alphabet.from_generators(self.alphabet),
            horizon=self.horizon,
            words=frozenset(self.words),
            exact=self.exact,
        )

    @model_validator(mode="after")
    def sort_words(self):
        self.words = sorted(set(self.words), key=sort_key)
        return self


class LanguageRecipe(BaseModel):
    """How to regenerate an exact language at any horizon"""

    kind: Literal["rational", "ends", "subst"]
    word: Optional[str] = Field(None, description="Cyclic word w of L(w)")
    left: Optional[str] = Field(None, description="Left period of ^∞(left)·center·(right)^∞")
    center: str = ""
    right: Optional[str] = Field(None, description="Right period")
    rules: Optional[str] = Field(None, description='Substitution, e.g. "a:ab,b:a"')
    seed: Optional[str] = Field(None, description="Prolongable generator")
    rank: Optional[int] = Field(None, ge=2, le=26, description="Alphabet rank override")

    @field_validator("word", "center")
    @classmethod
    def parse_words(cls, v):
        return v if v is None else parse_word(v)

    @model_validator(mode="after")
    def check_parameters(self):
        required = {
            "rational": ("word",),
            "ends": ("left", "right"),
            "subst": ("rules", "seed"),
        }[self.kind]
        missing = [name for name in required if not getattr(self, name)]
        if missing:
            raise ValueError(f"A {self.kind} recipe needs {', '.join(missing)}")
        return self

    def _alphabet(self, *words: str) -> Alphabet:
        if self.rank is not None:
            return Alphabet(rank=self.rank)
        return Alphabet.for_words(words)

    def build(self, horizon: int) -> FactorLanguage:
        if self.kind == "rational":
            return rational(self.word, horizon, self._alphabet(self.word))
        if self.kind == "ends":
            spec = BiinfiniteWordSpec(
                left_period=self.left, center=self.center, right_period=self.right
            )
            return from_ends(spec, horizon, self._alphabet(self.left, self.center, self.right))
        phi = Endomorphism.from_rules(
            self.rules, Alphabet(rank=self.rank) if self.rank else None
        )
        return from_substitution(phi, self.seed, horizon)

    def describe(self) -> str:
        if self.kind == "rational":
            return f"L({self.word})"
        if self.kind == "ends":
            return f"^∞({self.left})·{self.center}·({self.right})^∞"
        return f"subst[{self.rules}] from {self.seed}"
