import math

from pydantic import BaseModel, model_validator

from ..exceptions import WordError
from .alphabet import word_key
from .word import (
    common_prefix_length,
    cyclic_reduce,
    invert,
    is_cyclically_reduced,
    is_reduced,
    primitive_root,
)


class BoundaryPoint(BaseModel):
    """An eventually periodic point u·p^∞ of ∂F_N, kept in canonical form"""

    prefix: str = ""
    period: str

    model_config = {"frozen": True}

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data):
        if not isinstance(data, dict):
            return data
        prefix = data.get("prefix", "") or ""
        period = data.get("period", "") or ""
        word_key(prefix + period)
        if not period:
            raise ValueError("A boundary point needs a nonempty period")
        if not is_reduced(prefix):
            raise ValueError(f"Prefix {prefix!r} is not reduced")
        if not is_cyclically_reduced(period):
            raise ValueError(f"Period {period!r} is not cyclically reduced")
        if prefix and prefix[-1] == period[0].swapcase():
            raise ValueError(f"{prefix!r}·({period!r})^∞ is not reduced")
        period = primitive_root(period)
        # a trailing copy of the period's last letter is absorbed into the period
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1] + period[:-1]
        return {"prefix": prefix, "period": period}

    def letter(self, i: int) -> str:
        """The i-th letter, counting from 0"""
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def head(self, n: int) -> str:
        """The prefix X_n of length n"""
        return "".join(self.letter(i) for i in range(n))

    def tail(self, k: int) -> "BoundaryPoint":
        """The point with its first k letters removed"""
        if k <= len(self.prefix):
            return BoundaryPoint(prefix=self.prefix[k:], period=self.period)
        shift = (k - len(self.prefix)) % len(self.period)
        return BoundaryPoint(period=self.period[shift:] + self.period[:shift])

    def __str__(self) -> str:
        return f"{self.prefix}({self.period})^∞"


def infinity_word(w: str, sign: int = 1) -> BoundaryPoint:
    """w^{+∞} for sign > 0, w^{-∞} for sign < 0"""
    core, conjugator, _ = cyclic_reduce(w)
    if core is None:
        raise WordError("The trivial word has no endpoints at infinity")
    period = core.word if sign > 0 else invert(core.word)
    return BoundaryPoint(prefix=conjugator, period=period)


def common_prefix(x: BoundaryPoint, y: BoundaryPoint) -> int:
    """Length of the longest common prefix; -1 when the points are equal"""
    if x == y:
        return -1
    # past both prefixes, agreement on |p_x| + |p_y| letters forces equal tails
    bound = max(len(x.prefix), len(y.prefix)) + len(x.period) + len(y.period)
    return common_prefix_length(x.head(bound), y.head(bound))


def boundary_distance(x: BoundaryPoint, y: BoundaryPoint) -> float:
    """d_𝒜(X, Y) = exp(-max{n ≥ 0 | X_n = Y_n}), 0 when X = Y"""
    k = common_prefix(x, y)
    if k < 0:
        return 0.0
    return math.exp(-k)
