"""
The action of automorphisms on laminary languages: image words, chopped until the
factor sets stop changing, with a recomputation from a deeper source horizon.
"""

import logging
import math
from functools import lru_cache
from typing import Optional, Set, Tuple, Union

from . import config
from .cancellation import bbt_estimate
from .exceptions import ActionError, HorizonError, LanguageError
from .langkit import symmetric_factors
from .models import Alphabet, Automorphism, Endomorphism, FactorLanguage, compose

logger = logging.getLogger(__name__)


def norm(alpha: Union[Automorphism, Endomorphism]) -> int:
    """|α|_𝒜 = max{|α(x)| : x ∈ 𝒜}"""
    return alpha.norm


@lru_cache(maxsize=256)
def _lower_bound(rank: int, key: Tuple[str, ...]) -> int:
    alphabet = Alphabet(rank=rank)
    phi = Endomorphism(alphabet=alphabet, images=dict(zip(alphabet.generators, key)))
    radius = min(config.ACT_BBT_RADIUS, 4 * phi.norm)
    return bbt_estimate(phi, k_max=radius).lower


def chop_constant(alpha: Automorphism) -> int:
    """C₀ = lower + (lower + 2), with lower the bounded cancellation estimate"""
    lower = _lower_bound(alpha.alphabet.rank, alpha.forward.key)
    return 2 * lower + 2


def source_horizon(alpha: Automorphism, n: int, constant: Optional[int] = None) -> int:
    """Horizon an input language needs so that act(alpha, ·, n) can run and self-check"""
    if constant is None:
        constant = chop_constant(alpha)
    return _primary_horizon(alpha, n, constant) + 2


def _primary_horizon(alpha: Automorphism, n: int, constant: int) -> int:
    # images of length-m words are at least m / |α⁻¹| long, enough to chop C₀ + 1
    return math.ceil(alpha.conorm * (n + 2 * constant + 2))


def _stable_core(
    alpha: Automorphism, language: FactorLanguage, m: int, n: int, constant: int
) -> Tuple[Set[str], int]:
    images = [alpha.apply(w) for w in language.of_length(m)]
    if not images:
        raise LanguageError(f"The language has no words of length {m}")
    budget = (min(len(image) for image in images) - n) // 2

    def chopped(k: int) -> Set[str]:
        return symmetric_factors([image[k : len(image) - k] for image in images], n)

    current = chopped(constant)
    for k in range(constant, budget):
        following = chopped(k + 1)
        if following == current:
            return current, k
        current = following
    raise ActionError(
        f"Chopped images of {alpha.describe()} did not stabilize within depth {budget} "
        f"(C₀ = {constant}); retry with a larger chop constant"
    )


def act(
    alpha: Automorphism,
    language: FactorLanguage,
    n: int,
    constant: Optional[int] = None,
) -> FactorLanguage:
    """
    Exact 𝓛_n of α̂(L): apply α to the longest words of L, then chop until two
    consecutive depths give the same factors of length ≤ n. The result is recomputed
    from a source horizon two letters deeper and must agree.
    """
    if not isinstance(alpha, Automorphism):
        raise ActionError("The action is defined for automorphisms with a verified inverse")
    if not language.exact:
        raise LanguageError("The action needs an exact language")
    alpha.alphabet.same_as(language.alphabet)
    if n < 1:
        raise HorizonError("The target horizon must be at least 1")
    if constant is None:
        constant = chop_constant(alpha)

    m = _primary_horizon(alpha, n, constant)
    if language.horizon < m + 2:
        raise HorizonError(
            f"act({alpha.describe()}) at n = {n} needs a language of horizon {m + 2}, "
            f"got {language.horizon}; regenerate it at a larger horizon"
        )

    words, depth = _stable_core(alpha, language, m, n, constant)
    check, check_depth = _stable_core(alpha, language, m + 2, n, constant)
    if words != check:
        raise ActionError(
            f"act({alpha.describe()}) disagrees between source horizons {m} and {m + 2}"
        )
    logger.info(
        "act(%s) at n=%s: source horizon %s, C₀=%s, stable at depth %s (check %s)",
        alpha.describe(),
        n,
        m,
        constant,
        depth,
        check_depth,
    )
    return FactorLanguage(
        alphabet=language.alphabet, horizon=n, words=frozenset(words), exact=True
    )


def verify_composition(
    alpha: Automorphism, beta: Automorphism, language: FactorLanguage, n: int
) -> bool:
    """act(α∘β, L, n) = act(α, act(β, L, n'), n) with n' the horizon act(α, ·, n) needs"""
    direct = act(compose(alpha, beta), language, n)
    intermediate = act(beta, language, source_horizon(alpha, n))
    chained = act(alpha, intermediate, n)
    return direct.words == chained.words


def composition_horizon(alpha: Automorphism, beta: Automorphism, n: int) -> int:
    """Smallest input horizon verify_composition(alpha, beta, ·, n) accepts"""
    return max(
        source_horizon(compose(alpha, beta), n),
        source_horizon(beta, source_horizon(alpha, n)),
    )
