from typing import Optional, Sequence

from ..exceptions import LanguageError
from ..langkit import equal_at
from ..models import FactorLanguage


def converge_check(
    sequence: Sequence[FactorLanguage], target: FactorLanguage, n: int
) -> Optional[int]:
    """
    Least index K (counting from 0) with equal_at(L_k, target, n) for every k ≥ K
    in the sequence; None when even the last language disagrees.
    """
    for language in (*sequence, target):
        if not language.exact:
            raise LanguageError("Convergence checks need exact languages")
    index = None
    for k in range(len(sequence) - 1, -1, -1):
        if not equal_at(sequence[k], target, n):
            break
        index = k
    return index
