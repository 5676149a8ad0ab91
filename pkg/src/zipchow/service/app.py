"""FastAPI application exposing each report as a POST endpoint."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import MatrixCapExceeded, ParameterError
from . import handlers
from .models import (
    AbelianGroupModel,
    BtRequest,
    DatumRequest,
    FzipRequest,
    M11Model,
    M11Request,
    OrbitCountModel,
    OrbitsRequest,
    QDimensionModel,
    ReportModel,
    ReportRequest,
)

app = FastAPI(
    title="zipchow",
    version="0.1.0",
    description=(
        "Exact graded Chow rings of stacks of zips and truncated displays: "
        "per-degree free ranks and torsion chains, Picard groups, rational "
        "dimensions, orbit counts, and p-localized reports."
    ),
)


@app.exception_handler(ParameterError)
async def parameter_error_handler(_request: Request, exc: ParameterError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(MatrixCapExceeded)
async def matrix_cap_handler(_request: Request, exc: MatrixCapExceeded):
    return JSONResponse(status_code=413, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/present", response_model=ReportModel)
def present_endpoint(req: ReportRequest) -> ReportModel:
    return handlers.handle_present(req)


@app.post("/graded", response_model=ReportModel)
def graded_endpoint(req: ReportRequest) -> ReportModel:
    return handlers.handle_graded(req)


@app.post("/picard", response_model=AbelianGroupModel)
def picard_endpoint(req: DatumRequest) -> AbelianGroupModel:
    return handlers.handle_picard(req)


@app.post("/qdim", response_model=QDimensionModel)
def qdim_endpoint(req: DatumRequest) -> QDimensionModel:
    return handlers.handle_qdim(req)


@app.post("/orbits", response_model=OrbitCountModel)
def orbits_endpoint(req: OrbitsRequest) -> OrbitCountModel:
    return handlers.handle_orbits(req)


@app.post("/fzip", response_model=ReportModel)
def fzip_endpoint(req: FzipRequest) -> ReportModel:
    return handlers.handle_fzip(req)


@app.post("/bt", response_model=ReportModel)
def bt_endpoint(req: BtRequest) -> ReportModel:
    return handlers.handle_bt(req)


@app.post("/m11", response_model=M11Model)
def m11_endpoint(req: M11Request) -> M11Model:
    return handlers.handle_m11(req)
