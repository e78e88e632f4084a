"""
Generators of exact factor languages and the conversions between boundary pairs,
biinfinite leaves and languages.
"""

import logging
from typing import Optional

from . import config
from .exceptions import (
    CertificationError,
    HorizonError,
    LanguageError,
    SubstitutionError,
    WordError,
)
from .langkit import equal_at, gap_bound, symmetric_factors
from .models import (
    Alphabet,
    BiinfiniteWordSpec,
    BoundaryPoint,
    CyclicWord,
    Endomorphism,
    FactorLanguage,
    boundary_distance,
    central_factors,
    common_prefix,
    cyclic_reduce,
    factors,
    invert,
)
from .models.alphabet import word_key

logger = logging.getLogger(__name__)

__all__ = [
    "boundary_distance",
    "central_factors",
    "from_ends",
    "from_substitution",
    "rational",
    "rational_approximant",
    "rho",
]


def _periodic_factors(period: str, n: int) -> set:
    covering = period * (n // len(period) + 2)
    return {covering[i : i + k] for i in range(len(period)) for k in range(1, n + 1)}


def rational(
    w: str, n: int, alphabet: Optional[Alphabet] = None
) -> FactorLanguage:
    """Exact 𝓛_n of the rational lamination L(w)"""
    core, _, _ = cyclic_reduce(w)
    if core is None:
        raise WordError("L(w) needs a nontrivial word w")
    if alphabet is None:
        alphabet = Alphabet.for_words([w])
    alphabet.check_word(w)
    alphabet.require_lamination_rank()
    found = _periodic_factors(core.word, n)
    return FactorLanguage(
        alphabet=alphabet,
        horizon=n,
        words=frozenset(found | {invert(x) for x in found}),
        exact=True,
    )


def from_ends(
    spec: BiinfiniteWordSpec, n: int, alphabet: Optional[Alphabet] = None
) -> FactorLanguage:
    """Exact 𝓛_n of the lamination generated by one eventually periodic leaf"""
    if alphabet is None:
        alphabet = Alphabet.for_words([spec.left_period, spec.center, spec.right_period])
    alphabet.require_lamination_rank()
    covering = spec.covering_word(n)
    alphabet.check_word(covering)
    return FactorLanguage(
        alphabet=alphabet,
        horizon=n,
        words=frozenset(symmetric_factors([covering], n)),
        exact=True,
    )


def _check_substitution(phi: Endomorphism, seed: str) -> None:
    if not phi.is_positive():
        raise SubstitutionError(f"{phi.describe()} has an image using inverse letters")
    if len(seed) != 1 or seed not in phi.alphabet.generators:
        raise SubstitutionError(f"Seed {seed!r} must be a single generator")
    image = phi.images[seed]
    if len(image) < 2 or image[0] != seed:
        raise SubstitutionError(
            f"{phi.describe()} is not prolongable on {seed}: "
            f"the image must start with {seed} and have length at least 2"
        )
    if not phi.is_primitive():
        raise SubstitutionError(
            f"{phi.describe()} is not primitive; its fixed word need not be recurrent"
        )


def from_substitution(phi: Endomorphism, seed: str, n: int) -> FactorLanguage:
    """Exact 𝓛_n of the lamination generated by the fixed word of a prolongable substitution"""
    _check_substitution(phi, seed)
    phi.alphabet.require_lamination_rank()
    word = seed
    previous = None
    for iteration in range(config.SUBSTITUTION_MAX_ITERATIONS):
        grown = phi.apply(word)
        if len(grown) <= len(word):
            raise SubstitutionError(f"Iterating {phi.describe()} does not grow")
        word = grown
        current = factors(word, n)
        if len(word) >= n and current == previous:
            logger.info(
                "Substitution %s stabilized at iteration %s (|word| = %s)",
                phi.describe(),
                iteration + 1,
                len(word),
            )
            return FactorLanguage(
                alphabet=phi.alphabet,
                horizon=n,
                words=frozenset(current | {invert(x) for x in current}),
                exact=True,
            )
        previous = current
    raise SubstitutionError(
        f"Factor sets of {phi.describe()} did not stabilize within "
        f"{config.SUBSTITUTION_MAX_ITERATIONS} iterations"
    )


def rho(x: BoundaryPoint, y: BoundaryPoint) -> BiinfiniteWordSpec:
    """ρ(X, Y) = X⁻¹Y with the longest common prefix removed; z_1 is Y's first remaining letter"""
    k = common_prefix(x, y)
    if k < 0:
        raise WordError("ρ needs two distinct boundary points")
    x_tail, y_tail = x.tail(k), y.tail(k)
    return BiinfiniteWordSpec(
        left_period=invert(x_tail.period),
        center=invert(x_tail.prefix) + y_tail.prefix,
        right_period=y_tail.period,
        origin=len(x_tail.prefix),
    )


def _least_word(words) -> Optional[str]:
    return min(words, key=word_key) if words else None


def _marker(w1: str, w3: str, u: str, m: int) -> Optional[str]:
    """u or u⁻¹ when it occurs in both outer thirds, else the least length-m word they share"""
    for marker in (u, invert(u)):
        if marker in w1 and marker in w3:
            return marker
    shared = {w1[i : i + m] for i in range(len(w1) - m + 1)} & {
        w3[i : i + m] for i in range(len(w3) - m + 1)
    }
    marker = _least_word(shared)
    if marker is not None:
        logger.warning(
            "Neither %s nor its inverse occurs in both %s and %s; using the shared word %s",
            u,
            w1,
            w3,
            marker,
        )
    return marker


def rational_approximant(language: FactorLanguage, m: int) -> CyclicWord:
    """
    Build a cyclic word v' whose rational lamination agrees with `language` up to
    length m, from a bounded gap K witnessed at this horizon.
    """
    if not language.exact:
        raise LanguageError("Approximation needs an exact language")
    gap = gap_bound(language, m)
    if gap is None:
        raise HorizonError(
            f"No bounded gap for m = {m} is witnessed at horizon {language.horizon}"
        )
    if 3 * gap > language.horizon:
        raise HorizonError(
            f"The construction needs horizon {3 * gap} (K = {gap}), "
            f"the language carries {language.horizon}"
        )
    u = _least_word(language.of_length(m))
    v = _least_word(language.of_length(3 * gap))
    if u is None or v is None:
        raise HorizonError(
            f"The language has no word of length {m} or {3 * gap} at horizon {language.horizon}"
        )
    w1, w2, w3 = v[:gap], v[gap : 2 * gap], v[2 * gap :]
    marker = _marker(w1, w3, u, m)
    if marker is None:
        raise HorizonError(
            f"No word of length {m} occurs in both {w1} and {w3} (v = {v}); "
            "regenerate the language at a larger horizon"
        )
    # v' = marker·w₁''·w₂·w₃' is the factor of v between the two occurrences
    i, j = w1.find(marker), w3.find(marker)
    approximant = marker + w1[i + m :] + w2 + w3[:j]
    core = CyclicWord(word=approximant)
    if not equal_at(rational(core.word, m, language.alphabet), language, m):
        raise CertificationError(
            f"v' = {approximant} does not reproduce 𝓛_{m} of the language"
        )
    logger.info("Approximant for m=%s: K=%s, |v'|=%s", m, gap, len(approximant))
    return core
