"""
Desk-scale reproductions: no rational lamination matches the two-ended leaf
^∞a·b^∞, minimal laminations are limits of rational ones, and L([a,b]) is fixed
by every automorphism of F₂ while staying far from L(a).
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional

from .. import config
from ..autaction import act, source_horizon
from ..exceptions import CertificationError, HorizonError
from ..langkit import difference, distance, gap_bound
from ..lamgen import from_ends, rational, rational_approximant
from ..models import (
    Alphabet,
    BiinfiniteWordSpec,
    CyclicWord,
    cyclic_reduce,
    cyclic_words,
    word_key,
)
from ..schemas import (
    FixedPointReport,
    FixedPointRow,
    LanguageRecipe,
    LimitSetReport,
    LimitSetRow,
    NotDenseReport,
    NotDenseRow,
)
from .nielsen import sample_automorphisms

logger = logging.getLogger(__name__)

COMMUTATOR = "ABab"


def _map(fn: Callable, items: Iterable, workers: Optional[int] = None) -> list:
    """Order-preserving map, across processes when more than one worker is configured"""
    workers = config.WORKERS if workers is None else workers
    items = list(items)
    if workers <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def two_ended_spec() -> BiinfiniteWordSpec:
    """The leaf ...aaa·bbb..."""
    return BiinfiniteWordSpec(left_period="a", right_period="b")


def _notdense_row(args) -> NotDenseRow:
    word, n = args
    candidate = rational(word, n, Alphabet(rank=2))
    target = from_ends(two_ended_spec(), n, Alphabet(rank=2))
    differing = difference(candidate, target, n)
    if not differing:
        return NotDenseRow(word=word, equal=True)
    if set(word.lower()) == {"a"} or set(word.lower()) == {"b"}:
        # a pure power never sees the junction word
        preferred = "ab"
    else:
        mixed = [w for w in differing if len(w) == 2 and w[0] == "b" and w[1] != "b"]
        preferred = min(mixed, key=word_key) if mixed else differing[0]
    chosen = preferred if preferred in differing else differing[0]
    return NotDenseRow(
        word=word,
        equal=False,
        distinguishing=chosen,
        missing_from_ends=chosen in candidate,
    )


def repro_notdense(n: int, max_len: int, workers: Optional[int] = None) -> NotDenseReport:
    """Compare 𝓛_n(^∞a·b^∞) with 𝓛_n(L(w)) for every cyclic word w of length ≤ max_len"""
    if n < 2:
        raise HorizonError("The non-density check needs n ≥ 2")
    words = [w.word for w in cyclic_words(Alphabet(rank=2), max_len)]
    rows = _map(_notdense_row, [(w, n) for w in words], workers)
    report = NotDenseReport(
        n=n, max_len=max_len, rows=rows, all_fail=all(not row.equal for row in rows)
    )
    logger.info(
        "notdense n=%s max_len=%s: %s cyclic words, all fail: %s",
        n,
        max_len,
        len(rows),
        report.all_fail,
    )
    return report


def _limitset_row(recipe: LanguageRecipe, m: int) -> LimitSetRow:
    bound = math.exp(-((m - 1) // 2))
    horizon = max(3 * m, config.DEFAULT_HORIZON)
    while True:
        language = recipe.build(horizon)
        try:
            approximant = rational_approximant(language, m)
            break
        except HorizonError as error:
            if 2 * horizon > config.HORIZON_LIMIT:
                return LimitSetRow(
                    m=m, horizon=horizon, bound=bound, certified=False, detail=str(error)
                )
            logger.warning(
                "m=%s: %s; regenerating at horizon %s", m, error, 2 * horizon
            )
            horizon *= 2
        except CertificationError as error:
            return LimitSetRow(
                m=m, horizon=horizon, bound=bound, certified=False, detail=str(error)
            )
    return LimitSetRow(
        m=m,
        horizon=horizon,
        gap=gap_bound(language, m),
        approximant=approximant.word,
        length=len(approximant),
        bound=bound,
        certified=True,
    )


def repro_limitset(recipe: LanguageRecipe, m_max: int) -> LimitSetReport:
    """For m = 1..m_max build v'(m) and certify 𝓛_m(L(v'(m))) = 𝓛_m(L)"""
    rows = [_limitset_row(recipe, m) for m in range(1, m_max + 1)]
    return LimitSetReport(
        recipe=recipe, rows=rows, passed=all(row.certified for row in rows)
    )


def approximants(recipe: LanguageRecipe, m_max: int) -> List[CyclicWord]:
    """v'(1), ..., v'(m_max), for convergence checks"""
    report = repro_limitset(recipe, m_max)
    if not report.passed:
        raise CertificationError(f"Approximation of {recipe.describe()} failed")
    return [CyclicWord(word=row.approximant) for row in report.rows]


def _fixedpoint_row(args) -> FixedPointRow:
    trial, alpha, labels = args
    alphabet = alpha.alphabet
    commutator = CyclicWord(word=COMMUTATOR)
    image = alpha.apply(COMMUTATOR)
    core = cyclic_reduce(image)[0]
    preserved = core is not None and (core == commutator or core == commutator.inverse())

    source = rational(COMMUTATOR, source_horizon(alpha, 2), alphabet)
    acted = act(alpha, source, 2)
    separating = sorted(
        (w for w in acted.of_length(2) if w[1].lower() != w[0].lower()), key=word_key
    )
    gap = distance(rational("a", 2, alphabet), acted)
    passed = preserved and bool(separating) and gap.value == 1.0 and not gap.capped
    return FixedPointRow(
        trial=trial,
        moves=labels,
        automorphism=alpha.describe(),
        image=image,
        cyclic_class=core.canonical if core is not None else "",
        preserved=preserved,
        separating_word=separating[0] if separating else None,
        distance=gap.value,
        passed=passed,
    )


def repro_fixedpoint(
    trials: int,
    nielsen_len: int,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> FixedPointReport:
    """Sampled automorphisms of F₂ fix L([a,b]), which stays at distance 1 from L(a)"""
    seed = config.SEED if seed is None else seed
    samples = sample_automorphisms(trials, nielsen_len, seed)
    rows = _map(
        _fixedpoint_row,
        [(i, alpha, labels) for i, (alpha, labels) in enumerate(samples)],
        workers,
    )
    report = FixedPointReport(
        trials=trials,
        nielsen_len=nielsen_len,
        seed=seed,
        rows=rows,
        passed=all(row.passed for row in rows),
    )
    logger.info("fixedpoint: %s trials, all passed: %s", trials, report.passed)
    return report
