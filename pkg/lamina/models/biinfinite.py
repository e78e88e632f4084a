import math
from typing import Tuple

from pydantic import BaseModel, model_validator

from ..exceptions import WordError
from .alphabet import word_key
from .boundary import BoundaryPoint
from .word import cyclic_reduce, invert, is_cyclically_reduced, is_reduced, primitive_root


class BiinfiniteWordSpec(BaseModel):
    """
    The eventually periodic leaf ^∞(left_period)·center·(right_period)^∞.

    Letters are indexed by ℤ: with origin 0 the first letter of the center (or of
    the right period when the center is empty) is z_1, and z_0 is the last letter
    of the left period. A nonzero origin shifts the indexing, z_i = D[i + origin]
    where D is the origin-0 word.
    """

    left_period: str
    center: str = ""
    right_period: str
    origin: int = 0

    model_config = {"frozen": True}

    @model_validator(mode="before")
    @classmethod
    def validate_junctions(cls, data):
        if not isinstance(data, dict):
            return data
        left = data.get("left_period", "") or ""
        center = data.get("center", "") or ""
        right = data.get("right_period", "") or ""
        word_key(left + center + right)
        for name, period in (("left", left), ("right", right)):
            if not period:
                raise ValueError(f"The {name} period must be nonempty")
            if not is_cyclically_reduced(period):
                raise ValueError(f"The {name} period {period!r} is not cyclically reduced")
        if not is_reduced(left[-1] + center + right[0]):
            raise ValueError(f"^∞({left})·{center}·({right})^∞ is not reduced")
        return {
            **data,
            "left_period": primitive_root(left),
            "center": center,
            "right_period": primitive_root(right),
        }

    def _at(self, j: int) -> str:
        """Letter D[j] of the origin-0 word"""
        if j <= 0:
            return self.left_period[(j - 1) % len(self.left_period)]
        if j <= len(self.center):
            return self.center[j - 1]
        return self.right_period[(j - len(self.center) - 1) % len(self.right_period)]

    def letter(self, i: int) -> str:
        """z_i"""
        return self._at(i + self.origin)

    def window(self, i: int, j: int) -> str:
        """z_i ... z_j"""
        return "".join(self.letter(k) for k in range(i, j + 1))

    def central(self, n: int) -> str:
        """The central subword Z_n = z_{-n} ... z_n of length 2n + 1"""
        return self.window(-n, n)

    def covering_word(self, n: int) -> str:
        """A finite subword of Z containing every factor of Z of length at most n"""
        left = self.left_period * (n // len(self.left_period) + 2)
        right = self.right_period * (n // len(self.right_period) + 2)
        return left + self.center + right

    def shift(self, m: int = 1) -> "BiinfiniteWordSpec":
        """σ^m: z'_i = z_{i+m}"""
        return self.model_copy(update={"origin": self.origin + m})

    def inverse(self) -> "BiinfiniteWordSpec":
        """Z⁻¹ with z'_i = (z_{1-i})⁻¹"""
        return BiinfiniteWordSpec(
            left_period=invert(self.right_period),
            center=invert(self.center),
            right_period=invert(self.left_period),
            origin=len(self.center) - self.origin,
        )

    def ends(self) -> Tuple[BoundaryPoint, BoundaryPoint]:
        """(Z₋, Z₊) with Z₋ = z_0⁻¹ z_{-1}⁻¹ ... and Z₊ = z_1 z_2 ..."""
        start = 1 + self.origin
        periodic_from = max(start, len(self.center) + 1)
        plus = BoundaryPoint(
            prefix="".join(self._at(j) for j in range(start, periodic_from)),
            period="".join(
                self._at(j)
                for j in range(periodic_from, periodic_from + len(self.right_period))
            ),
        )
        start = self.origin
        periodic_from = min(start, 0)
        minus = BoundaryPoint(
            prefix="".join(
                self._at(j).swapcase() for j in range(start, periodic_from, -1)
            ),
            period="".join(
                self._at(j).swapcase()
                for j in range(periodic_from, periodic_from - len(self.left_period), -1)
            ),
        )
        return minus, plus

    def __str__(self) -> str:
        shown = f"^∞({self.left_period})·{self.center}·({self.right_period})^∞"
        return shown if not self.origin else f"σ^{self.origin}[{shown}]"


def periodic_spec(w: str) -> BiinfiniteWordSpec:
    """The periodic leaf ...ppp... of w's cyclic core p, indexed with z_0 = p[0]"""
    core, _, _ = cyclic_reduce(w)
    if core is None:
        raise WordError("The trivial word has no periodic leaf")
    p = core.word
    rotated = p[1:] + p[0]
    return BiinfiniteWordSpec(left_period=rotated, right_period=rotated)


def central_factors(spec: BiinfiniteWordSpec, n: int) -> str:
    return spec.central(n)


def biinfinite_distance(z: BiinfiniteWordSpec, other: BiinfiniteWordSpec) -> float:
    """exp(-max({n ≥ 0 | Z_n = Z'_n} ∪ {0})), 0 for identical indexed words"""
    # once the central windows reach past both centers and cover both periods
    # twice, agreement means the indexed words coincide
    bound = (
        abs(z.origin)
        + abs(other.origin)
        + len(z.center)
        + len(other.center)
        + 2 * (len(z.left_period) + len(z.right_period))
        + 2 * (len(other.left_period) + len(other.right_period))
    )
    n = 0
    while n <= bound:
        if z.letter(-n) != other.letter(-n) or z.letter(n) != other.letter(n):
            return math.exp(-max(n - 1, 0))
        n += 1
    return 0.0
