"""FastAPI front end for the toolkit."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import (BranchViolation, ConstraintIncompatible, DegenerateStep, QuatKGError,
                      TrivialSolution, ZeroIncidentFlux, ZeroMass)
from . import runners, schemas

app = FastAPI(title="quatkg", version=__version__,
              description="Quaternionic Klein-Gordon solvers with finite-difference verification")


def _domain_error(exc: QuatKGError) -> HTTPException:
    detail = schemas.ErrorDetail(error=type(exc).__name__, message=str(exc))
    if isinstance(exc, ConstraintIncompatible):
        detail.which = exc.which
        detail.residual = exc.residual
    return HTTPException(status_code=409, detail=detail.model_dump())


_DOMAIN_ERRORS = (ConstraintIncompatible, BranchViolation, TrivialSolution,
                  DegenerateStep, ZeroMass, ZeroIncidentFlux)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/solve", response_model=schemas.SolveResponse)
def solve(req: schemas.SolveRequest) -> schemas.SolveResponse:
    try:
        return runners.solve(req)
    except _DOMAIN_ERRORS as exc:
        raise _domain_error(exc) from exc


@app.post("/current", response_model=schemas.CurrentResponse)
def current(req: schemas.CurrentRequest) -> schemas.CurrentResponse:
    try:
        return runners.current_grid(req)
    except _DOMAIN_ERRORS as exc:
        raise _domain_error(exc) from exc


@app.post("/scatter", response_model=schemas.ScatterResponse)
def scatter(req: schemas.ScatterRequest) -> schemas.ScatterResponse:
    try:
        return runners.scatter(req)
    except _DOMAIN_ERRORS as exc:
        raise _domain_error(exc) from exc


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    try:
        return runners.verify(req)
    except _DOMAIN_ERRORS as exc:
        raise _domain_error(exc) from exc


@app.post("/lightcone", response_model=schemas.LightconeResponse)
def lightcone(req: schemas.LightconeRequest) -> schemas.LightconeResponse:
    try:
        return runners.lightcone(req)
    except _DOMAIN_ERRORS as exc:
        raise _domain_error(exc) from exc
