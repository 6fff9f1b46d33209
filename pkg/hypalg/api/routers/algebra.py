"""Algebra API router: products and matrix translations."""

import logging

from fastapi import APIRouter, Depends, status

from hypalg.api.routers.dependencies import get_workbench
from hypalg.models.schemas import (
    MultiplyRequest,
    MultiplyResponse,
    TranslateRequest,
    TranslateResponse,
)
from hypalg.services.workbench import AlgebraWorkbench

logger = logging.getLogger(__name__)

algebra_router = APIRouter(prefix="/api/algebra", tags=["Algebra"])


@algebra_router.post(
    "/multiply",
    response_model=MultiplyResponse,
    summary="Multiply quaternions or octonions",
    status_code=status.HTTP_200_OK,
)
async def multiply(request: MultiplyRequest, bench: AlgebraWorkbench = Depends(get_workbench)):
    """Multiply the factors in order; octonions honour ``group_left``."""
    logger.info(f"Multiplying {len(request.factors)} factors (octonion={request.octonion})")
    return bench.multiply(request.factors, octonion=request.octonion, group_left=request.group_left)


@algebra_router.post(
    "/translate",
    response_model=TranslateResponse,
    summary="Translate an operator into its real or complex matrix",
    status_code=status.HTTP_200_OK,
)
async def translate(request: TranslateRequest, bench: AlgebraWorkbench = Depends(get_workbench)):
    return bench.translate(request.operator, octonion=request.octonion, complex_form=request.complex)
