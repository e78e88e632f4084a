from .language import (
    LanguageFile,
    LanguageRecipe,
)
from .automorphism import (
    AutomorphismFile,
    AutomorphismSummary,
)
from .reports import (
    ConvergenceReport,
    FixedPointReport,
    FixedPointRow,
    LimitSetReport,
    LimitSetRow,
    NotDenseReport,
    NotDenseRow,
)
from .requests import (
    ActRequest,
    BBTRequest,
    CheckRequest,
    CheckResponse,
    ChopRequest,
    DistanceRequest,
    DistanceResponse,
    FixedPointRequest,
    LimitSetRequest,
    MakeRequest,
    NotDenseRequest,
    RauzyRequest,
    RauzyResponse,
)

__all__ = [
    # Language schemas
    "LanguageFile",
    "LanguageRecipe",
    # Automorphism schemas
    "AutomorphismFile",
    "AutomorphismSummary",
    # Reports
    "ConvergenceReport",
    "FixedPointReport",
    "FixedPointRow",
    "LimitSetReport",
    "LimitSetRow",
    "NotDenseReport",
    "NotDenseRow",
    # Request and response bodies
    "ActRequest",
    "BBTRequest",
    "CheckRequest",
    "CheckResponse",
    "ChopRequest",
    "DistanceRequest",
    "DistanceResponse",
    "FixedPointRequest",
    "LimitSetRequest",
    "MakeRequest",
    "NotDenseRequest",
    "RauzyRequest",
    "RauzyResponse",
]
