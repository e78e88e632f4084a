"""
Horizon-truncated laminary languages: closure, chop, laminarity and minimality
checks, and the ultrametric between languages.
"""

import logging
import math
from typing import Dict, Iterable, List, Optional

from pydantic import BaseModel

from .exceptions import HorizonError, LanguageError
from .models import Alphabet, FactorLanguage, factors, invert, is_reduced, sort_key

logger = logging.getLogger(__name__)


def symmetric_factors(seeds: Iterable[str], horizon: int) -> set:
    """All factors of length ≤ horizon of the seeds, together with their inverses"""
    found = set()
    for seed in seeds:
        found |= factors(seed, horizon)
    return found | {invert(w) for w in found}


def close(
    seeds: Iterable[str], horizon: int, alphabet: Optional[Alphabet] = None
) -> FactorLanguage:
    """Smallest symmetric factorial language containing the length-≤n factors of the seeds"""
    seeds = [s for s in seeds]
    if not any(seeds):
        raise LanguageError("Cannot close an empty seed set")
    for seed in seeds:
        if not is_reduced(seed):
            raise LanguageError(f"Seed {seed!r} is not reduced")
    if alphabet is None:
        alphabet = Alphabet.for_words(seeds)
    return FactorLanguage(
        alphabet=alphabet,
        horizon=horizon,
        words=frozenset(symmetric_factors(seeds, horizon)),
    )


def chop(language: FactorLanguage, k: int) -> FactorLanguage:
    """𝓛†_k at finite horizon: cut k letters from both ends of every word, then re-close"""
    if k < 0:
        raise ValueError("The chop depth must be nonnegative")
    if k == 0:
        return language
    horizon = language.horizon - 2 * k
    if horizon <= 0:
        raise HorizonError(
            f"Chopping {k} letters exhausts the horizon {language.horizon}"
        )
    chopped = [w[k : len(w) - k] for w in language.words if len(w) > 2 * k]
    return FactorLanguage(
        alphabet=language.alphabet,
        horizon=horizon,
        words=frozenset(symmetric_factors(chopped, horizon)),
        exact=language.exact,
    )


def is_symmetric(language: FactorLanguage) -> bool:
    return all(invert(w) in language.words for w in language.words)


def is_factorial(language: FactorLanguage) -> bool:
    # closure under dropping one end letter implies closure under all subwords
    return all(
        len(w) == 1 or (w[1:] in language.words and w[:-1] in language.words)
        for w in language.words
    )


def is_laminary_at(language: FactorLanguage) -> bool:
    """Symmetric, factorial and bi-extendable as far as the horizon can witness"""
    if not language.words or not is_symmetric(language) or not is_factorial(language):
        return False
    n = language.horizon
    letters = language.alphabet.letters
    for w in language.words:
        if len(w) <= n - 2:
            if not any(
                x + w + y in language.words for x in letters for y in letters
            ):
                return False
        elif len(w) == n - 1:
            if not any(x + w in language.words for x in letters):
                return False
            if not any(w + y in language.words for y in letters):
                return False
    return True


class LanguageDistance(BaseModel):
    """d(𝓛, 𝓛') = exp(-agreement); `capped` means the horizon bounds the agreement"""

    value: float
    agreement: int
    capped: bool

    model_config = {"frozen": True}

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return f"≤ {self.value:.6g}" if self.capped else f"{self.value:.6g}"


def _require_exact(*languages: FactorLanguage) -> None:
    for language in languages:
        if not language.exact:
            raise LanguageError(
                "This operation needs exact languages (produced by a generator)"
            )


def equal_at(left: FactorLanguage, right: FactorLanguage, m: int) -> bool:
    """𝓛_m(L) = 𝓛_m(L')"""
    left.alphabet.same_as(right.alphabet)
    if m > left.horizon or m > right.horizon:
        raise HorizonError(
            f"Cannot compare at length {m}: horizons are {left.horizon} and {right.horizon}"
        )
    return all(left.of_length(k) == right.of_length(k) for k in range(1, m + 1))


def is_sublanguage_at(left: FactorLanguage, right: FactorLanguage, m: int) -> bool:
    """𝓛_m(L) ⊆ 𝓛_m(L'): L lies in the e^{-n}-neighbourhood of L' for m = 2n + 1"""
    left.alphabet.same_as(right.alphabet)
    if m > left.horizon or m > right.horizon:
        raise HorizonError(
            f"Cannot compare at length {m}: horizons are {left.horizon} and {right.horizon}"
        )
    return all(left.of_length(k) <= right.of_length(k) for k in range(1, m + 1))


def distance(left: FactorLanguage, right: FactorLanguage) -> LanguageDistance:
    """exp(-max({n ≥ 0 | 𝓛_{2n+1} = 𝓛'_{2n+1}} ∪ {0})) over the common horizon"""
    left.alphabet.same_as(right.alphabet)
    _require_exact(left, right)
    horizon = min(left.horizon, right.horizon)
    cap = (horizon - 1) // 2
    agreement = 0
    for n in range(cap + 1):
        if not equal_at(left, right, 2 * n + 1):
            return LanguageDistance(
                value=math.exp(-agreement), agreement=agreement, capped=False
            )
        agreement = n
    return LanguageDistance(value=math.exp(-cap), agreement=cap, capped=True)


def gap_bound(language: FactorLanguage, m: int) -> Optional[int]:
    """
    Least K such that every word of length K contains every word of length ≤ m,
    up to inversion; None when the horizon does not witness such a K.
    """
    _require_exact(language)
    if m > language.horizon:
        raise HorizonError(f"m = {m} exceeds the horizon {language.horizon}")
    required = [w for w in language.up_to(m)]
    for size in range(1, language.horizon + 1):
        long_words = language.of_length(size)
        if not long_words:
            return None
        if all(
            all(u in w or invert(u) in w for u in required) for w in long_words
        ):
            logger.debug("Bounded gap for m=%s witnessed at K=%s", m, size)
            return size
    return None


def is_positive(language: FactorLanguage) -> bool:
    """Every word uses generator letters only or inverse letters only"""
    return all(w.islower() or w.isupper() for w in language.words)


def _aligned(left: FactorLanguage, right: FactorLanguage):
    left.alphabet.same_as(right.alphabet)
    horizon = min(left.horizon, right.horizon)
    return left.truncate(horizon), right.truncate(horizon), horizon


def union(left: FactorLanguage, right: FactorLanguage) -> FactorLanguage:
    left, right, horizon = _aligned(left, right)
    return FactorLanguage(
        alphabet=left.alphabet, horizon=horizon, words=left.words | right.words
    )


def intersect(left: FactorLanguage, right: FactorLanguage) -> FactorLanguage:
    left, right, horizon = _aligned(left, right)
    return FactorLanguage(
        alphabet=left.alphabet, horizon=horizon, words=left.words & right.words
    )


def complexity(language: FactorLanguage) -> List[int]:
    """Number of words of each length 1..horizon"""
    return [len(language.of_length(k)) for k in range(1, language.horizon + 1)]


def difference(left: FactorLanguage, right: FactorLanguage, m: int) -> List[str]:
    """Words of length ≤ m in exactly one of the two languages, in canonical order"""
    left.alphabet.same_as(right.alphabet)
    return sorted(left.up_to(m) ^ right.up_to(m), key=sort_key)


def as_table(language: FactorLanguage) -> Dict[int, List[str]]:
    return {
        k: sorted(language.of_length(k), key=sort_key)
        for k in range(1, language.horizon + 1)
    }
