from pydantic import BaseModel, Field
from typing import Optional

from .automorphism import AutomorphismFile
from .language import LanguageFile, LanguageRecipe


class MakeRequest(BaseModel):
    recipe: LanguageRecipe
    horizon: int = Field(..., ge=1, le=256, description="Horizon n of the generated 𝓛_n")


class ChopRequest(BaseModel):
    language: LanguageFile
    k: int = Field(..., ge=0, description="Letters cut from each end")


class DistanceRequest(BaseModel):
    left: LanguageFile
    right: LanguageFile


class DistanceResponse(BaseModel):
    value: float
    agreement: int
    capped: bool


class CheckRequest(BaseModel):
    language: LanguageFile
    m: Optional[int] = Field(None, ge=1, description="Word length for the gap check")


class CheckResponse(BaseModel):
    laminary: bool
    positive: bool
    gap: Optional[int] = None


class RauzyRequest(BaseModel):
    language: LanguageFile
    k: int = Field(..., ge=1, description="Node word length")


class RauzyResponse(BaseModel):
    nodes: int
    edges: int
    dot: str


class ActRequest(BaseModel):
    automorphism: AutomorphismFile
    language: LanguageFile
    n: int = Field(..., ge=1, description="Target horizon")


class BBTRequest(BaseModel):
    automorphism: AutomorphismFile
    k_max: Optional[int] = Field(None, ge=1, le=12, description="Search radius")
    window: Optional[int] = Field(None, ge=1, description="Stabilization window")


class LimitSetRequest(BaseModel):
    recipe: LanguageRecipe
    m_max: int = Field(..., ge=1, le=8)


class NotDenseRequest(BaseModel):
    n: int = Field(2, ge=2)
    max_len: int = Field(8, ge=1, le=12)


class FixedPointRequest(BaseModel):
    trials: int = Field(10, ge=1, le=200)
    nielsen_len: int = Field(6, ge=0, le=12)
    seed: Optional[int] = None
