from typing import Dict, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, model_validator

from ..exceptions import AlphabetError
from .alphabet import Alphabet
from .word import ReducedWord, invert, is_reduced, parse_word, reduce


class Endomorphism(BaseModel):
    """A map F(𝒜) → F(𝒜) given by the images of the generators"""

    alphabet: Alphabet
    images: Dict[str, str]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_images(self):
        generators = set(self.alphabet.generators)
        if set(self.images) != generators:
            raise ValueError(
                f"Images must be given for exactly the generators {sorted(generators)}"
            )
        for generator, image in self.images.items():
            self.alphabet.check_word(image)
            if not is_reduced(image):
                raise ValueError(f"Image of {generator} ({image!r}) is not reduced")
        return self

    @property
    def key(self) -> Tuple[str, ...]:
        """Generator images in generator order; identifies the map"""
        return tuple(self.images[g] for g in self.alphabet.generators)

    @property
    def norm(self) -> int:
        """|φ|_𝒜 = max over generators of the image length"""
        return max(len(image) for image in self.images.values())

    def image(self, letter: str) -> str:
        if letter.islower():
            return self.images[letter]
        return invert(self.images[letter.lower()])

    def apply(self, word: str) -> ReducedWord:
        self.alphabet.check_word(word)
        return reduce("".join(self.image(x) for x in word))

    def is_positive(self) -> bool:
        """All generator images use generator letters only"""
        return all(image.islower() for image in self.images.values())

    def incidence_matrix(self) -> np.ndarray:
        """M[i, j] = occurrences of generator i in the image of generator j"""
        gens = self.alphabet.generators
        matrix = np.zeros((len(gens), len(gens)), dtype=np.int64)
        for j, g in enumerate(gens):
            for letter in self.images[g]:
                matrix[gens.index(letter.lower()), j] += 1
        return matrix

    def is_primitive(self) -> bool:
        """Some power of the incidence matrix is strictly positive"""
        n = self.alphabet.rank
        reach = (self.incidence_matrix() > 0).astype(np.int64)
        power = reach
        # Wielandt: a primitive n×n matrix has a positive power of exponent (n-1)²+1
        for _ in range((n - 1) ** 2):
            power = np.minimum(power @ reach, 1)
        return bool((power > 0).all())

    def describe(self) -> str:
        return ",".join(f"{g}:{self.images[g] or '1'}" for g in self.alphabet.generators)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Endomorphism":
        return cls(alphabet=alphabet, images={g: g for g in alphabet.generators})

    @classmethod
    def from_rules(
        cls, rules: Union[str, Dict[str, str]], alphabet: Optional[Alphabet] = None
    ) -> "Endomorphism":
        """Build from "a:ab,b:a" or {"a": "ab", "b": "a"}; missing generators are fixed"""
        if isinstance(rules, str):
            pairs = {}
            for item in rules.split(","):
                if not item.strip():
                    continue
                generator, _, image = item.partition(":")
                pairs[generator.strip()] = image.strip()
            rules = pairs
        rules = {g: parse_word(image) for g, image in rules.items()}
        for generator in rules:
            if len(generator) != 1 or not generator.islower():
                raise AlphabetError(f"{generator!r} is not a generator")
        if alphabet is None:
            alphabet = Alphabet.for_words(list(rules) + list(rules.values()))
        images = {g: reduce(rules.get(g, g), alphabet) for g in alphabet.generators}
        return cls(alphabet=alphabet, images=images)


class Automorphism(BaseModel):
    """An endomorphism together with a verified inverse"""

    forward: Endomorphism
    backward: Endomorphism

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_inverse(self):
        self.forward.alphabet.same_as(self.backward.alphabet)
        if not verify_inverse(self.forward, self.backward):
            raise ValueError(
                f"{self.backward.describe()} is not an inverse of {self.forward.describe()}"
            )
        return self

    @property
    def alphabet(self) -> Alphabet:
        return self.forward.alphabet

    @property
    def norm(self) -> int:
        """|α|_𝒜"""
        return self.forward.norm

    @property
    def conorm(self) -> int:
        """|α⁻¹|_𝒜"""
        return self.backward.norm

    def apply(self, word: str) -> ReducedWord:
        return self.forward.apply(word)

    def inverse(self) -> "Automorphism":
        return Automorphism(forward=self.backward, backward=self.forward)

    def describe(self) -> str:
        return self.forward.describe()

    @classmethod
    def from_rules(
        cls,
        images: Union[str, Dict[str, str]],
        inverse: Union[str, Dict[str, str]],
        alphabet: Optional[Alphabet] = None,
    ) -> "Automorphism":
        if alphabet is None:
            forward = Endomorphism.from_rules(images)
            backward = Endomorphism.from_rules(inverse)
            rank = max(forward.alphabet.rank, backward.alphabet.rank)
            alphabet = Alphabet(rank=rank)
        return cls(
            forward=Endomorphism.from_rules(images, alphabet),
            backward=Endomorphism.from_rules(inverse, alphabet),
        )

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Automorphism":
        identity = Endomorphism.identity(alphabet)
        return cls(forward=identity, backward=identity)

    @classmethod
    def inner(cls, alphabet: Alphabet, g: str) -> "Automorphism":
        """Conjugation x ↦ g⁻¹xg"""
        g = reduce(g, alphabet)
        forward = {x: reduce(invert(g) + x + g) for x in alphabet.generators}
        backward = {x: reduce(g + x + invert(g)) for x in alphabet.generators}
        return cls(
            forward=Endomorphism(alphabet=alphabet, images=forward),
            backward=Endomorphism(alphabet=alphabet, images=backward),
        )


def apply(phi: Union[Endomorphism, Automorphism], word: str) -> ReducedWord:
    """Letterwise image followed by free reduction"""
    return phi.apply(word)


def compose(phi, psi):
    """phi ∘ psi (apply psi first); automorphisms compose with their inverses"""
    if isinstance(phi, Automorphism) and isinstance(psi, Automorphism):
        return Automorphism(
            forward=compose(phi.forward, psi.forward),
            backward=compose(psi.backward, phi.backward),
        )
    if isinstance(phi, Automorphism) or isinstance(psi, Automorphism):
        phi = phi.forward if isinstance(phi, Automorphism) else phi
        psi = psi.forward if isinstance(psi, Automorphism) else psi
    phi.alphabet.same_as(psi.alphabet)
    images = {g: phi.apply(psi.images[g]) for g in phi.alphabet.generators}
    return Endomorphism(alphabet=phi.alphabet, images=images)


def verify_inverse(phi: Endomorphism, psi: Endomorphism) -> bool:
    """Both composites fix every generator"""
    phi.alphabet.same_as(psi.alphabet)
    for g in phi.alphabet.generators:
        if phi.apply(psi.images[g]) != g or psi.apply(phi.images[g]) != g:
            return False
    return True
