"""
Random automorphisms as products of Nielsen moves, with the inverse of every move
written down alongside it so the product always carries a verified inverse.
"""

import random
from typing import List, Optional, Tuple

from ..exceptions import AlphabetError
from ..models import Alphabet, Automorphism, Endomorphism, compose

# x ↦ xy, x ↦ yx, x ↦ x⁻¹, x ↔ y
MOVES = ("right", "left", "invert", "swap")


def nielsen_move(alphabet: Alphabet, kind: str, x: str, y: str) -> Automorphism:
    """One elementary automorphism on the ordered generator pair (x, y)"""
    if x == y or x not in alphabet.generators or y not in alphabet.generators:
        raise AlphabetError(f"({x}, {y}) is not a pair of distinct generators")
    forward = {g: g for g in alphabet.generators}
    backward = dict(forward)
    if kind == "right":
        forward[x], backward[x] = x + y, x + y.upper()
    elif kind == "left":
        forward[x], backward[x] = y + x, y.upper() + x
    elif kind == "invert":
        forward[x] = backward[x] = x.upper()
    elif kind == "swap":
        forward[x], forward[y] = y, x
        backward[x], backward[y] = y, x
    else:
        raise ValueError(f"Unknown Nielsen move {kind!r}")
    return Automorphism(
        forward=Endomorphism(alphabet=alphabet, images=forward),
        backward=Endomorphism(alphabet=alphabet, images=backward),
    )


def random_automorphism(
    alphabet: Alphabet, length: int, rng: random.Random
) -> Tuple[Automorphism, List[str]]:
    """Product of `length` uniformly chosen moves; returns it with the move labels"""
    alpha = Automorphism.identity(alphabet)
    labels = []
    for _ in range(length):
        kind = rng.choice(MOVES)
        x, y = rng.sample(alphabet.generators, 2)
        alpha = compose(nielsen_move(alphabet, kind, x, y), alpha)
        labels.append(f"{kind}({x},{y})")
    return alpha, labels


def sample_automorphisms(
    count: int,
    max_moves: int,
    seed: int,
    alphabet: Optional[Alphabet] = None,
) -> List[Tuple[Automorphism, List[str]]]:
    """`count` automorphisms of 1..max_moves moves each, reproducible from the seed"""
    alphabet = alphabet or Alphabet(rank=2)
    alphabet.require_lamination_rank()
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        length = rng.randint(1, max_moves) if max_moves > 0 else 0
        samples.append(random_automorphism(alphabet, length, rng))
    return samples
