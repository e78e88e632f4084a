from fastapi import APIRouter, HTTPException
from pydantic import ValidationError

from .. import langkit, lamgen
from ..exceptions import LaminaError
from ..schemas import (
    CheckRequest,
    CheckResponse,
    ChopRequest,
    DistanceRequest,
    DistanceResponse,
    LanguageFile,
    MakeRequest,
    RauzyRequest,
    RauzyResponse,
)
from ..workbench import rauzy_graph, to_dot

router = APIRouter(prefix="/languages", tags=["languages"])


@router.post("/make", response_model=LanguageFile)
def make_language(request: MakeRequest):
    """Generate the exact 𝓛_n described by a recipe"""
    try:
        language = request.recipe.build(request.horizon)
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return LanguageFile.from_language(language)


@router.post("/chop", response_model=LanguageFile)
def chop_language(request: ChopRequest):
    try:
        language = langkit.chop(request.language.to_language(), request.k)
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return LanguageFile.from_language(language)


@router.post("/distance", response_model=DistanceResponse)
def language_distance(request: DistanceRequest):
    try:
        result = langkit.distance(
            request.left.to_language(), request.right.to_language()
        )
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return DistanceResponse(
        value=result.value, agreement=result.agreement, capped=result.capped
    )


@router.post("/check", response_model=CheckResponse)
def check_language(request: CheckRequest):
    """Laminarity and positivity, plus the bounded gap at length m when asked"""
    try:
        language = request.language.to_language()
        gap = langkit.gap_bound(language, request.m) if request.m else None
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return CheckResponse(
        laminary=langkit.is_laminary_at(language),
        positive=langkit.is_positive(language),
        gap=gap,
    )


@router.post("/approximant")
def language_approximant(request: CheckRequest):
    """Rational approximant v' at length m of an exact minimal language"""
    if request.m is None:
        raise HTTPException(status_code=400, detail="m is required")
    try:
        word = lamgen.rational_approximant(request.language.to_language(), request.m)
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return {"m": request.m, "approximant": word.word, "length": len(word)}


@router.post("/rauzy", response_model=RauzyResponse)
def language_rauzy(request: RauzyRequest):
    try:
        graph = rauzy_graph(request.language.to_language(), request.k)
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))
    return RauzyResponse(
        nodes=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
        dot=to_dot(graph, name=f"rauzy_{request.k}"),
    )
