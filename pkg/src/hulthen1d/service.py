"""HTTP service exposing the same computations as the CLI.

POST endpoints accept the potential parameters plus per-command grid fields
and return the standard report envelope {params, command, results,
tolerances, status}.  Domain validation errors map to 400, numerical
failures to 422.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, runs
from .errors import (HulthenError, InvalidEnergy, InvalidGrid, InvalidParameter)
from .potential import Mode, PotentialParams

app = FastAPI(title="hulthen1d", version=__version__)


class ParamsIn(BaseModel):
    m: float = 1.0
    a: float = 0.5
    b: float = 0.5
    q: float = 0.5
    qt: float = 0.5
    v0: float = 1.0
    mode: Literal["barrier", "well"] = "barrier"

    def to_params(self) -> PotentialParams:
        return PotentialParams(m=self.m, a=self.a, b=self.b, q=self.q,
                               q_tilde=self.qt, v0=self.v0, mode=Mode(self.mode))


class ProfileRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    xmin: float = -10.0
    xmax: float = 10.0
    n: int = 201


class ScatterRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    energy: float


class EnergyScanRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    emin: float = 0.1
    emax: float = 10.0
    n: int = 200


class StrengthScanRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    energy: float
    v0min: float = 0.0
    v0max: float = 5.0
    n: int = 100


class BoundRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    scan_points: int = 2000
    root_tol: float = 1e-9
    trace: bool = False


class VerifyRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    emin: float = 0.1
    emax: float = 10.0
    n: int = 20


class Report(BaseModel):
    params: dict
    command: str
    results: dict
    tolerances: dict
    status: str


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (InvalidParameter, InvalidGrid, InvalidEnergy) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except HulthenError as exc:
        raise HTTPException(status_code=422, detail=f"numerical failure: {exc}")


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/profile", response_model=Report)
def profile_endpoint(req: ProfileRequest) -> dict:
    p = _guard(req.params.to_params)
    rows = _guard(runs.profile_rows, p, req.xmin, req.xmax, req.n)
    return runs.envelope(p, "profile", {"rows": rows})


@app.post("/scatter", response_model=Report)
def scatter_endpoint(req: ScatterRequest) -> dict:
    p = _guard(req.params.to_params)
    row = _guard(runs.scatter_row, p, req.energy)
    return runs.envelope(p, "scatter", {"rows": [row]})


@app.post("/scan-e", response_model=Report)
def scan_e_endpoint(req: EnergyScanRequest) -> dict:
    p = _guard(req.params.to_params)
    rows = _guard(runs.energy_scan, p, req.emin, req.emax, req.n)
    return runs.envelope(p, "scan-e", {"rows": rows})


@app.post("/scan-v0", response_model=Report)
def scan_v0_endpoint(req: StrengthScanRequest) -> dict:
    p = _guard(req.params.to_params)
    rows = _guard(runs.strength_scan, p, req.energy, req.v0min, req.v0max, req.n)
    return runs.envelope(p, "scan-v0", {"rows": rows})


@app.post("/bound", response_model=Report)
def bound_endpoint(req: BoundRequest) -> dict:
    p = _guard(req.params.to_params)
    summary, trace = _guard(runs.bound_run, p, req.scan_points, req.root_tol,
                            req.trace)
    if trace is not None:
        summary["results"]["trace"] = trace
    return summary


@app.post("/verify", response_model=Report)
def verify_endpoint(req: VerifyRequest) -> dict:
    p = _guard(req.params.to_params)
    report, _ok = _guard(runs.verify_run, p, req.emin, req.emax, req.n)
    return report
