"""HTTP service: thin routes over the handlers.

Status contract: malformed documents are 422 (model validation),
well-formed documents with classification violations are 400 with the
full report in the detail, and /validate itself always answers 200.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..core import rational_parse
from ..documents import DocumentError
from . import handlers
from .schemas import (
    DualResponse,
    EnumerateRequest,
    EnumerateResponse,
    HealthResponse,
    MuStarResponse,
    RepSpecDocument,
    ValidationReportModel,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="spdual",
    version=__version__,
    description=(
        "Exact calculator for strongly positive representation data: "
        "validation, Jacquet-module expansion, and Aubert duals."
    ),
)


def _document(doc: RepSpecDocument) -> dict:
    return doc.model_dump(exclude_none=True)


@app.get("/health", response_model=HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=ValidationReportModel)
def validate(doc: RepSpecDocument) -> dict:
    try:
        return handlers.validate_payload(_document(doc))
    except DocumentError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/dual", response_model=DualResponse, response_model_exclude_none=True)
def dual(doc: RepSpecDocument) -> dict:
    try:
        return handlers.dual_payload(_document(doc))
    except DocumentError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except handlers.InvalidRepresentation as exc:
        raise HTTPException(status_code=400, detail=handlers.report_to_dict(exc.report))


@app.post("/mu-star", response_model=MuStarResponse, response_model_exclude_none=True)
def mu_star(doc: RepSpecDocument) -> dict:
    try:
        return handlers.mu_star_payload(_document(doc))
    except DocumentError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except handlers.InvalidRepresentation as exc:
        raise HTTPException(status_code=400, detail=handlers.report_to_dict(exc.report))


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_tuples(req: EnumerateRequest) -> dict:
    return handlers.enumerate_payload(
        alpha=rational_parse(req.alpha),
        max_offset=req.max_offset,
        rho=req.rho,
        group=req.group,
        cuspidal_support=req.cuspidal_support,
        with_duals=req.with_duals,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> dict:
    return handlers.verify_payload(req.to_config())
