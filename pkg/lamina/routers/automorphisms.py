from fastapi import APIRouter, HTTPException
from pydantic import ValidationError

from ..autaction import act, source_horizon
from ..cancellation import BBTEstimate, bbt_estimate
from ..exceptions import LaminaError
from ..models import Automorphism
from ..schemas import (
    ActRequest,
    AutomorphismFile,
    AutomorphismSummary,
    BBTRequest,
    LanguageFile,
)

router = APIRouter(prefix="/automorphisms", tags=["automorphisms"])


@router.post("/describe", response_model=AutomorphismSummary)
def describe_automorphism(morphism: AutomorphismFile):
    try:
        phi = morphism.to_morphism()
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return AutomorphismSummary(
        description=phi.describe(),
        norm=phi.norm,
        conorm=phi.conorm if isinstance(phi, Automorphism) else None,
        generators=list(phi.alphabet.generators),
    )


@router.post("/act", response_model=LanguageFile)
def act_on_language(request: ActRequest):
    """α̂ applied to an exact language; 400 when its horizon is too small"""
    try:
        alpha = request.automorphism.to_automorphism()
        language = act(alpha, request.language.to_language(), request.n)
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return LanguageFile.from_language(language)


@router.post("/source-horizon")
def act_source_horizon(request: ActRequest):
    try:
        alpha = request.automorphism.to_automorphism()
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return {"n": request.n, "horizon": source_horizon(alpha, request.n)}


@router.post("/bbt", response_model=BBTEstimate)
def estimate_bbt(request: BBTRequest):
    try:
        phi = request.automorphism.to_morphism()
        return bbt_estimate(phi, k_max=request.k_max, window=request.window)
    except (LaminaError, ValidationError, ValueError) as error:
        raise HTTPException(status_code=400, detail=str(error))
