"""HTTP entry point for hypalg.

Builds the FastAPI application, wires the routers and maps domain errors to
JSON responses. Run it with ``uvicorn hypalg.main:app`` or ``./run.sh``.
"""

import logging

from fastapi import FastAPI, Request
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from hypalg import __version__
from hypalg.api.routers.algebra import algebra_router
from hypalg.api.routers.groups import groups_router
from hypalg.api.routers.lorentz import lorentz_router
from hypalg.api.routers.verification import verification_router
from hypalg.config import configure_logging, settings
from hypalg.core.errors import HypalgError

configure_logging()
logger = logging.getLogger(__name__)

app = FastAPI(
    title="hypalg API",
    description="""
    Exact arithmetic for barred quaternion and octonion operators, their real
    and complex matrix translations, group generators and Lorentz transforms.
    """,
    license_info={"name": "MIT License", "url": "https://opensource.org/licenses/MIT"},
    version=__version__,
)


@app.exception_handler(HypalgError)
async def hypalg_exception_handler(request: Request, exc: HypalgError):
    """Report domain failures (parse errors, unsupported carriers, ...) as 422.

    Args:
        request: The incoming request
        exc: The domain error that was raised

    Returns:
        JSONResponse: ``{"detail": ..., "error": <exception class>}``
    """
    logger.warning(f"{request.url.path} failed: {exc}")
    return JSONResponse(
        status_code=422,
        content={"detail": str(exc), "error": type(exc).__name__},
    )


@app.exception_handler(RequestValidationError)
async def validation_exception_handler(request: Request, exc: RequestValidationError):
    logger.info(f"Rejected request to {request.url.path}: {exc.errors()}")
    return JSONResponse(status_code=422, content={"detail": jsonable_encoder(exc.errors())})


app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=False,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

app.include_router(algebra_router)
app.include_router(groups_router)
app.include_router(verification_router)
app.include_router(lorentz_router)


@app.get("/health", tags=["Health"])
async def health_check():
    """Liveness probe with the running version and default seed."""
    return {"status": "healthy", "version": __version__, "seed": settings.HYPALG_SEED}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("hypalg.main:app", host=settings.API_HOST, port=settings.API_PORT)
