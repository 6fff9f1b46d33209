"""Verification API router."""

import logging

from fastapi import APIRouter, Depends, Query

from hypalg.api.routers.dependencies import get_workbench
from hypalg.models.schemas import VerificationReportSchema
from hypalg.services.workbench import AlgebraWorkbench

logger = logging.getLogger(__name__)

verification_router = APIRouter(prefix="/api/verify", tags=["Verification"])


@verification_router.get(
    "/{suite}",
    response_model=VerificationReportSchema,
    summary="Run a verification suite (or all)",
)
async def run_suite(
    suite: str,
    jobs: int = Query(1, ge=1, le=16),
    bench: AlgebraWorkbench = Depends(get_workbench),
):
    """Run one suite by name, or ``all``; ``ok`` is false if any check fails."""
    return bench.verify([suite], jobs=jobs)
