from fastapi import APIRouter, HTTPException
from pydantic import ValidationError

from ..exceptions import LaminaError
from ..schemas import (
    FixedPointReport,
    FixedPointRequest,
    LimitSetReport,
    LimitSetRequest,
    NotDenseReport,
    NotDenseRequest,
)
from ..workbench import repro_fixedpoint, repro_limitset, repro_notdense

router = APIRouter(prefix="/repro", tags=["repro"])


@router.post("/notdense", response_model=NotDenseReport)
def run_notdense(request: NotDenseRequest):
    return repro_notdense(request.n, request.max_len, workers=1)


@router.post("/limitset", response_model=LimitSetReport)
def run_limitset(request: LimitSetRequest):
    try:
        return repro_limitset(request.recipe, request.m_max)
    except (LaminaError, ValidationError) as error:
        raise HTTPException(status_code=400, detail=str(error))


@router.post("/fixedpoint", response_model=FixedPointReport)
def run_fixedpoint(request: FixedPointRequest):
    try:
        return repro_fixedpoint(
            request.trials, request.nielsen_len, seed=request.seed, workers=1
        )
    except LaminaError as error:
        raise HTTPException(status_code=400, detail=str(error))
