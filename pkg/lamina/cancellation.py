"""
Bounded cancellation: the defect of a reduced product under an endomorphism, and
brute-force lower bounds for the cancellation constant with a stabilization flag.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from . import config
from .exceptions import CancellationError
from .models import (
    Automorphism,
    CyclicWord,
    Endomorphism,
    concat,
    cyclic_reduce,
    invert,
    is_cyclically_reduced,
    is_reduced,
    reduced_words,
    sort_key,
)
from .models.word import common_prefix_length

logger = logging.getLogger(__name__)

Morphism = Union[Endomorphism, Automorphism]


class BBTEstimate(BaseModel):
    """Certified lower bound for the cancellation constant, with its witness pair"""

    lower: int = Field(..., ge=0)
    witness_u: str = ""
    witness_v: str = ""
    search_radius: int
    stabilized: bool
    window: int
    history: List[int] = Field(
        default_factory=list, description="Maximal defect found at radius 1, 2, ..."
    )

    model_config = {"frozen": True}


def _forward(phi: Morphism) -> Endomorphism:
    return phi.forward if isinstance(phi, Automorphism) else phi


def defect(phi: Morphism, u: str, v: str) -> int:
    """(|φ(u)| + |φ(v)| - |φ(uv)|) / 2 for a reduced juxtaposition uv"""
    phi = _forward(phi)
    phi.alphabet.check_word(u + v)
    if not is_reduced(u) or not is_reduced(v):
        raise CancellationError(f"{u!r} and {v!r} must be reduced words")
    if concat(u, v)[1]:
        raise CancellationError(f"{u}·{v} is not a reduced product")
    return concat(phi.apply(u), phi.apply(v))[1]


def _images(phi: Endomorphism, k_max: int) -> Dict[str, str]:
    """φ(w) for every reduced w with |w| ≤ k_max, built letter by letter"""
    images = {"": ""}
    for w in reduced_words(phi.alphabet, k_max):
        images[w] = concat(images[w[:-1]], phi.image(w[-1]))[0]
    return images


def _group_max(args) -> Tuple[int, str, str]:
    """
    Largest common prefix between inverted images of u (ending in x) and images of
    v (starting in y): in the merged sorted list only neighbours need comparing.
    """
    left, right = args
    merged = sorted(
        [(image, 0, sort_key(u), u) for u, image in left]
        + [(image, 1, sort_key(v), v) for v, image in right]
    )
    found = [(0, "", "")]
    for first, second in zip(merged, merged[1:]):
        if first[1] != second[1]:
            u, v = (first[3], second[3]) if first[1] == 0 else (second[3], first[3])
            found.append((common_prefix_length(first[0], second[0]), u, v))
    return _pick(found)


def _pick(results: List[Tuple[int, str, str]]) -> Tuple[int, str, str]:
    best = max(r[0] for r in results)
    return min(
        (r for r in results if r[0] == best), key=lambda r: (sort_key(r[1]), sort_key(r[2]))
    )


def bbt_estimate(
    phi: Morphism,
    k_max: Optional[int] = None,
    window: Optional[int] = None,
    workers: Optional[int] = None,
) -> BBTEstimate:
    """Maximal defect over reduced pairs with |u|, |v| ≤ k, for k = 1..k_max"""
    phi = _forward(phi)
    window = config.BBT_WINDOW if window is None else window
    workers = config.WORKERS if workers is None else workers
    if k_max is None:
        k_max = 4 * phi.norm
        if k_max > config.BBT_RADIUS_CAP:
            logger.warning(
                "Search radius %s for %s clamped to %s",
                k_max,
                phi.describe(),
                config.BBT_RADIUS_CAP,
            )
            k_max = config.BBT_RADIUS_CAP
    if k_max < 1:
        raise ValueError("The search radius must be at least 1")

    images = _images(phi, k_max)
    letters = phi.alphabet.letters
    # u grouped by last letter, v by first: uv is reduced iff the pair of letters is
    ends: Dict[str, list] = {x: [] for x in letters}
    starts: Dict[str, list] = {y: [] for y in letters}
    by_length: Dict[int, List[str]] = {}
    for w in images:
        if w:
            by_length.setdefault(len(w), []).append(w)

    history = []
    best = (0, "", "")
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for radius in range(1, k_max + 1):
            for w in by_length.get(radius, []):
                ends[w[-1]].append((w, invert(images[w])))
                starts[w[0]].append((w, images[w]))
            tasks = [
                (ends[x], starts[y])
                for x in letters
                for y in letters
                if y != x.swapcase()
            ]
            if executor is not None:
                results = list(executor.map(_group_max, tasks))
            else:
                results = [_group_max(task) for task in tasks]
            found = _pick(results)
            if found[0] > best[0]:
                best = found
            history.append(best[0])
            logger.debug("Radius %s: max defect %s", radius, best[0])
    finally:
        if executor is not None:
            executor.shutdown()

    stabilized = k_max > window and history[-1] == history[-1 - window]
    lower, u, v = best
    if lower == 0:
        u, v = "", ""
    logger.info(
        "BBT estimate for %s: lower %s (radius %s, stabilized=%s)",
        phi.describe(),
        lower,
        k_max,
        stabilized,
    )
    return BBTEstimate(
        lower=lower,
        witness_u=u,
        witness_v=v,
        search_radius=k_max,
        stabilized=stabilized,
        window=window,
        history=history,
    )


def naive_bbt(phi: Morphism, k_max: int) -> Tuple[int, str, str]:
    """Full enumeration of reduced pairs; the reference for the pruned search"""
    phi = _forward(phi)
    words = list(reduced_words(phi.alphabet, k_max))
    best = (0, "", "")
    for u in words:
        for v in words:
            if u[-1] == v[0].swapcase():
                continue
            value = defect(phi, u, v)
            if value > best[0]:
                best = (value, u, v)
    return best


def almost_cyclic_r(phi: Morphism, w: Union[str, CyclicWord]) -> int:
    """The r with φ(w) = g·c·g⁻¹, |g| = r, c cyclically reduced"""
    word = w.word if isinstance(w, CyclicWord) else w
    return cyclic_reduce(_forward(phi).apply(word))[2]


def probe_cyclic(phi: Morphism, estimate: BBTEstimate, max_len: int = 8) -> BBTEstimate:
    """
    Compare almost_cyclic_r over cyclically reduced words up to max_len with the
    estimate; a larger r is a new witness (w, w) and raises the bound.
    """
    phi = _forward(phi)
    raised = estimate
    for word in reduced_words(phi.alphabet, max_len):
        if not is_cyclically_reduced(word):
            continue
        r = almost_cyclic_r(phi, word)
        if r > raised.lower:
            value = defect(phi, word, word)
            logger.warning(
                "almost_cyclic_r(%s) = %s exceeds the estimate %s; raising it",
                word,
                r,
                raised.lower,
            )
            raised = raised.model_copy(
                update={
                    "lower": value,
                    "witness_u": word,
                    "witness_v": word,
                    "stabilized": False,
                }
            )
    return raised
