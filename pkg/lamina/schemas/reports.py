from pydantic import BaseModel, Field
from typing import List, Optional

from .language import LanguageRecipe


class NotDenseRow(BaseModel):
    word: str
    equal: bool
    distinguishing: Optional[str] = Field(
        None, description="A word of length ≤ n in exactly one of the two languages"
    )
    missing_from_ends: bool = Field(
        False, description="True when the distinguishing word lies in L(w) only"
    )


class NotDenseReport(BaseModel):
    n: int
    max_len: int
    rows: List[NotDenseRow]
    all_fail: bool


class LimitSetRow(BaseModel):
    m: int
    horizon: int
    gap: Optional[int] = None
    approximant: Optional[str] = None
    length: Optional[int] = None
    bound: float = Field(..., description="exp(-floor((m - 1) / 2))")
    certified: bool
    detail: Optional[str] = None


class LimitSetReport(BaseModel):
    recipe: LanguageRecipe
    rows: List[LimitSetRow]
    passed: bool


class FixedPointRow(BaseModel):
    trial: int
    moves: List[str]
    automorphism: str
    image: str = Field(..., description="Image of the commutator ABab")
    cyclic_class: str
    preserved: bool
    separating_word: Optional[str] = None
    distance: float
    passed: bool


class FixedPointReport(BaseModel):
    trials: int
    nielsen_len: int
    seed: int
    rows: List[FixedPointRow]
    passed: bool


class ConvergenceReport(BaseModel):
    n: int
    count: int
    index: Optional[int] = Field(
        None, description="Least K with equal_at(L_k, L, n) for every k ≥ K"
    )
