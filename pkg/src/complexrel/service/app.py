"""FastAPI wiring around the handlers.

Error contract: every failure body is {"error": {"code", "message"}}.
Validation problems answer 422 with code "invalid-input"; domain errors map
to 400 with a code that distinguishes branch points from the other singular
inputs so clients can tell them apart without parsing prose.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..errors import (
    BranchPointError,
    DefectiveEigenproblemError,
    DomainError,
    NodeError,
    NonHolomorphicError,
    VelocityPoleError,
)
from . import handlers
from . import schemas as S

ERROR_CODES = {
    BranchPointError: "branch-point",
    VelocityPoleError: "velocity-pole",
    NodeError: "node",
    NonHolomorphicError: "non-holomorphic",
    DefectiveEigenproblemError: "defective-eigenproblem",
}


def error_code(exc: Exception) -> str:
    for klass, code in ERROR_CODES.items():
        if isinstance(exc, klass):
            return code
    if isinstance(exc, DomainError):
        return "domain"
    return "invalid-input"


def create_app() -> FastAPI:
    app = FastAPI(
        title="complexrel",
        description="Boosts, dispersion relations and wave equations over "
        "complex-valued space-time.",
    )

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": error_code(exc), "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def _request_invalid(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "invalid-input", "message": str(exc)}},
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "invalid-input", "message": str(exc)}},
        )

    @app.post("/boost", response_model=S.BoostResponse)
    def boost(req: S.BoostRequest):
        return handlers.handle_boost(req)

    @app.post("/add-vel", response_model=S.AddVelocitiesResponse)
    def add_vel(req: S.AddVelocitiesRequest):
        return handlers.handle_add_velocities(req)

    @app.post("/momentum", response_model=S.MomentumResponse)
    def momentum(req: S.MomentumRequest):
        return handlers.handle_momentum(req)

    @app.post("/dispersion")
    def dispersion(req: S.DispersionRequest):
        return handlers.handle_dispersion(req)

    @app.post("/wave-check")
    def wave_check(req: S.WaveCheckRequest):
        return handlers.handle_wave_check(req)

    @app.post("/check", response_model=S.CheckResponse)
    def check(req: S.CheckRequest):
        return handlers.handle_check(req)

    @app.post("/table", response_model=S.TableResponse)
    def table(req: S.TableRequest):
        return handlers.handle_table(req)

    @app.get("/constants", response_model=S.ConstantsResponse)
    def constants(units: str = Query("natural", pattern="^(natural|si)$")):
        return handlers.handle_constants(units)

    return app


app = create_app()
