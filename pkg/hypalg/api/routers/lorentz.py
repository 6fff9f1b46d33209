"""Lorentz API router."""

from fastapi import APIRouter, Depends

from hypalg.api.routers.dependencies import get_workbench
from hypalg.models.schemas import LorentzRequest, LorentzResponse
from hypalg.services.workbench import AlgebraWorkbench

lorentz_router = APIRouter(prefix="/api/lorentz", tags=["Lorentz"])


@lorentz_router.post("/transform", response_model=LorentzResponse, summary="Rotate or boost an event")
async def transform_event(request: LorentzRequest, bench: AlgebraWorkbench = Depends(get_workbench)):
    return bench.lorentz(request.kind, request.theta, request.event)
