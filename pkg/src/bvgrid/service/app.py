"""FastAPI application wrapping the core operations.

Input validation problems map to 422 and size-guard violations to 413, so
thin clients can recover the CLI exit-code contract from the HTTP status.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import InputError, SizeGuardError
from ..ops import run_distance, run_precompact, run_variation, run_verify
from ..report import TOOL_VERSION
from .schemas import (
    DistanceRequest,
    HealthResponse,
    PrecompactRequest,
    ReportResponse,
    VariationRequest,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="bvgrid", version=TOOL_VERSION)

    @app.exception_handler(InputError)
    async def _input_error(request: Request, exc: InputError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(SizeGuardError)
    async def _size_guard(request: Request, exc: SizeGuardError) -> JSONResponse:
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", tool_version=TOOL_VERSION)

    @app.post("/variation", response_model=ReportResponse)
    async def variation(req: VariationRequest) -> ReportResponse:
        report = run_variation(req.function, req.family_config, req.method)
        return ReportResponse(**report.to_json())

    @app.post("/distance", response_model=ReportResponse)
    async def distance(req: DistanceRequest) -> ReportResponse:
        report = run_distance(
            req.function_a, req.function_b, req.family_config, req.method
        )
        return ReportResponse(**report.to_json())

    @app.post("/verify", response_model=ReportResponse)
    async def verify(req: VerifyRequest) -> ReportResponse:
        report = run_verify(req.suite, req.seed, req.count)
        return ReportResponse(**report.to_json())

    @app.post("/precompact", response_model=ReportResponse)
    async def precompact(req: PrecompactRequest) -> ReportResponse:
        report = run_precompact(req.family, req.epsilon, req.family_config)
        return ReportResponse(**report.to_json())

    return app


app = create_app()
