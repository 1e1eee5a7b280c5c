"""HTTP face of the package.

Every endpoint calls the same report pipeline as the matching command
line subcommand, so the two front ends cannot diverge.  Run with e.g.

    uvicorn scaleflat.service:app

Verdicts travel in the response body (including the exit_code field the
command line would use); malformed expressions come back as 422.
"""

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from .cli.reports import (
    CheckReport,
    DualReport,
    FibrationReport,
    SelftestReport,
    StructureReport,
    check_report,
    dual_report,
    fibration_report_model,
    structure_report,
)
from .cli.selftest import run_selftest
from .duality import SolutionFamily
from .jetframe import PDESystem
from .symexpr import DomainError, ParseError

app = FastAPI(
    title="scaleflat",
    description="flatness of second order PDE systems under scale symmetry",
)


class SystemBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    f11: str
    f12: str
    f22: str


class StructureBody(SystemBody):
    level: Literal[9, 10, 11]


class FamilyBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    h: str
    inverse_x1: Optional[str] = None
    inverse_x2: Optional[str] = None


class FibrationBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    group: Literal["sl4", "scale", "compact"]
    seed: int = Field(default=0, ge=0)
    samples: int = Field(default=100, ge=1, le=2000)


class SelftestBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    seed: int = Field(default=0, ge=0)
    # full suites run for a minute; the service defaults to the short ones
    quick: bool = True


def _system(body: SystemBody) -> PDESystem:
    try:
        return PDESystem.from_strings(body.f11, body.f12, body.f22)
    except (ParseError, DomainError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/check", response_model=CheckReport)
def check(body: SystemBody):
    return check_report(_system(body))


@app.post("/dual", response_model=DualReport)
def dual(body: FamilyBody):
    try:
        family = SolutionFamily.from_strings(
            body.h, body.inverse_x1, body.inverse_x2
        )
    except (ParseError, DomainError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return dual_report(family)


@app.post("/verify-structure", response_model=StructureReport)
def verify_structure(body: StructureBody):
    return structure_report(_system(body), body.level)


@app.post("/fibration", response_model=FibrationReport)
def fibration(body: FibrationBody):
    return fibration_report_model(body.group, body.seed, body.samples)


@app.post("/selftest", response_model=SelftestReport)
def selftest(body: SelftestBody):
    return run_selftest(seed=body.seed, quick=body.quick)
