"""Group API router: generator bases and the dimensionality table."""

import logging
from typing import List

from fastapi import APIRouter, Depends, Query

from hypalg.api.routers.dependencies import get_workbench
from hypalg.config import settings
from hypalg.models.schemas import DimensionRowSchema, GeneratorReportSchema
from hypalg.services.workbench import AlgebraWorkbench

logger = logging.getLogger(__name__)

groups_router = APIRouter(prefix="/api/groups", tags=["Groups"])


@groups_router.get(
    "/dimension-table",
    response_model=List[DimensionRowSchema],
    summary="Dimensionality table",
)
async def dimension_table(
    n_max: int = Query(settings.DIM_TABLE_N_MAX, ge=1, le=8),
    solve: int = Query(0, ge=0, le=settings.SOLVE_N_MAX),
    bench: AlgebraWorkbench = Depends(get_workbench),
):
    """Closed-form counts for n = 1..n_max, solved exactly up to ``solve``."""
    return bench.dimension_table(n_max, solve_up_to=solve)


@groups_router.get(
    "/{family}/{carrier}/{n}",
    response_model=GeneratorReportSchema,
    summary="Generator basis of a group",
)
async def group_generators(
    family: str,
    carrier: str,
    n: int,
    basis: bool = Query(False, description="Include the full operator matrices"),
    bench: AlgebraWorkbench = Depends(get_workbench),
):
    logger.info(f"Generator request for {family}({n},{carrier})")
    return bench.generators(family, carrier, n, include_basis=basis)
