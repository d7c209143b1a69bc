"""HTTP facade over the runner layer.

Every endpoint accepts a JSON body mirroring the CLI options and returns the
same payload dict the CLI prints.  Status mapping: 200 for completed runs
(including verifications whose residuals fail, flagged in results.passed),
400 for malformed requests, 422 for structurally valid but infeasible
parameters (no Fock representation, constraint violations, inadmissible
charge parameters).
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .runner import RunConfig, UsageError, run

app = FastAPI(
    title="cyclosc",
    version=__version__,
    description="Cyclic-group-extended oscillator algebras over HTTP",
)


class AlgebraBody(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: int = Field(default=3, alias="lambda", ge=2)
    alpha: list[float] | None = None
    kappa: list[tuple[float, float]] | None = None   # complex entries as [re, im]


class InspectRequest(AlgebraBody):
    blocks: int = Field(default=5, ge=2)
    rel_tol: float | None = None
    timing: bool = False


class SpectrumRequest(AlgebraBody):
    levels: int = Field(default=12, ge=1)
    degen_tol: float = 1e-9
    timing: bool = False


class GridAxis(BaseModel):
    start: float
    stop: float
    step: float


class ScanRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: int = Field(default=3, alias="lambda", ge=2)
    grid: list[GridAxis]
    workers: int = Field(default=1, ge=1)
    levels: int = Field(default=12, ge=1)
    degen_tol: float = 1e-9
    timing: bool = False


class VerifyRequest(AlgebraBody):
    variant: Literal["ssqm", "pssqm", "bd", "pseudo1", "pseudo2", "ossqm"]
    blocks: int = Field(default=5, ge=3)
    rel_tol: float | None = None
    degen_tol: float = 1e-9
    timing: bool = False
    mu: int = 0
    broken: bool = False
    c: float = 1.0
    eta: float | None = None
    phi: float = 0.0
    r: float | None = None
    xi: float = 1.0
    order: int = 2
    check_constraint: bool = True


def _kappa_tuple(body: AlgebraBody) -> tuple[complex, ...] | None:
    if body.kappa is None:
        return None
    return tuple(complex(re, im) for re, im in body.kappa)


def _alpha_tuple(body: AlgebraBody) -> tuple[float, ...] | None:
    return None if body.alpha is None else tuple(body.alpha)


def _execute(cfg: RunConfig) -> dict:
    try:
        result = run(cfg)
    except UsageError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if result.payload.get("error") is not None:
        raise HTTPException(status_code=422, detail=result.payload["error"])
    return result.payload


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/inspect")
def inspect(req: InspectRequest) -> dict:
    return _execute(RunConfig(
        command="inspect",
        lam=req.lam,
        alpha_head=_alpha_tuple(req),
        kappa=_kappa_tuple(req),
        blocks=req.blocks,
        rel_tol=req.rel_tol,
        include_timing=req.timing,
    ))


@app.post("/spectrum")
def spectrum(req: SpectrumRequest) -> dict:
    return _execute(RunConfig(
        command="spectrum",
        lam=req.lam,
        alpha_head=_alpha_tuple(req),
        kappa=_kappa_tuple(req),
        levels=req.levels,
        degen_tol=req.degen_tol,
        include_timing=req.timing,
    ))


@app.post("/scan")
def scan(req: ScanRequest) -> dict:
    return _execute(RunConfig(
        command="scan",
        lam=req.lam,
        grid=tuple((ax.start, ax.stop, ax.step) for ax in req.grid),
        workers=req.workers,
        levels=req.levels,
        degen_tol=req.degen_tol,
        include_timing=req.timing,
    ))


@app.post("/verify")
def verify(req: VerifyRequest) -> dict:
    if req.variant == "ssqm":
        vp = {"broken": req.broken}
    elif req.variant in ("pssqm", "bd"):
        vp = {"mu": req.mu}
    elif req.variant == "pseudo1":
        vp = {"mu": req.mu, "c": req.c, "eta": req.eta, "phi": req.phi}
    elif req.variant == "pseudo2":
        vp = {"mu": req.mu, "c": req.c, "r": req.r}
    else:
        vp = {
            "mu": req.mu,
            "xi": req.xi,
            "phi": req.phi,
            "order": req.order,
            "check_constraint": req.check_constraint,
        }
    return _execute(RunConfig(
        command="verify",
        lam=req.lam,
        alpha_head=_alpha_tuple(req),
        kappa=_kappa_tuple(req),
        blocks=req.blocks,
        variant=req.variant,
        variant_params=vp,
        rel_tol=req.rel_tol,
        degen_tol=req.degen_tol,
        include_timing=req.timing,
    ))
