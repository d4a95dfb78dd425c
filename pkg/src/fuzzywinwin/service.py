"""Stateless HTTP JSON facade over the core math and the ledger engine.

All handlers are pure functions of their request bodies; there is no
session state, so any request sequence yields order-independent responses.
Validation failures return a problem document
``{"error_code", "message", "field"}`` with status 400.

Run with ``winwin serve`` or ``uvicorn fuzzywinwin.service:app``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, FiniteFloat

from .core import (
    NegotiationFrame,
    evaluate,
    price_for_decreasing,
    price_for_increasing,
    round_percent,
    sample_curves,
)
from .errors import (
    EmptyLedgerError,
    InvalidFrameError,
    InvalidInputError,
    InvalidRangeError,
    InvalidTargetError,
    ParseError,
    RecordError,
    WinWinError,
)
from .io import SCHEMA_VERSION, record_payload, summary_payload
from .ledger import DealRecord, DerivationRule, evaluate_record, summarize

_ERROR_CODES: list[tuple[type[WinWinError], str]] = [
    (InvalidFrameError, "degenerate_frame"),
    (InvalidTargetError, "target_out_of_range"),
    (InvalidRangeError, "invalid_range"),
    (InvalidInputError, "invalid_value"),
    (EmptyLedgerError, "empty_ledger"),
    (ParseError, "parse_error"),
]


class EvaluateRequest(BaseModel):
    schema_version: Literal[1] = SCHEMA_VERSION
    lower: FiniteFloat
    upper: FiniteFloat
    value: FiniteFloat


class InverseRequest(BaseModel):
    schema_version: Literal[1] = SCHEMA_VERSION
    lower: FiniteFloat
    upper: FiniteFloat
    party: Literal["increasing", "decreasing"]
    target: FiniteFloat


class RuleBody(BaseModel):
    constant_cost: FiniteFloat | None = None
    constant_upper: FiniteFloat | None = None
    settled_offset: FiniteFloat | None = None
    increasing_party: str = "seller"
    decreasing_party: str = "buyer"
    axis_label: str = "value"


class RecordBody(BaseModel):
    label: str
    cost_price: FiniteFloat | None = None
    reference_price: FiniteFloat | None = None
    settled_price: FiniteFloat | None = None


class LedgerRequest(BaseModel):
    schema_version: Literal[1] = SCHEMA_VERSION
    rule: RuleBody = RuleBody()
    records: list[RecordBody]


def _problem(status: int, code: str, message: str, field: str | None = None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error_code": code, "message": message, "field": field},
    )


def create_app(console_dir: str | Path | None = None) -> FastAPI:
    """Build the service; optionally serve a static web console at ``/``."""
    app = FastAPI(title="fuzzywinwin", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(WinWinError)
    async def domain_error(request: Request, exc: WinWinError) -> JSONResponse:
        for kind, code in _ERROR_CODES:
            if isinstance(exc, kind):
                return _problem(400, code, str(exc))
        return _problem(400, "invalid_request", str(exc))

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        first = exc.errors()[0] if exc.errors() else {}
        loc = [str(part) for part in first.get("loc", ()) if part != "body"]
        return _problem(
            400,
            "invalid_request",
            first.get("msg", "request does not match the schema"),
            field=".".join(loc) or None,
        )

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/v1/evaluate")
    def evaluate_endpoint(body: EvaluateRequest) -> dict:
        frame = NegotiationFrame(body.lower, body.upper)
        result = evaluate(frame, body.value)
        return {
            "schema_version": SCHEMA_VERSION,
            "swp_raw": result.increasing_share,
            "swp_percent": round_percent(result.increasing_share),
            "bwp_raw": result.decreasing_share,
            "bwp_percent": round_percent(result.decreasing_share),
            "zone": result.zone.value,
        }

    @app.post("/v1/inverse")
    def inverse_endpoint(body: InverseRequest) -> dict:
        frame = NegotiationFrame(body.lower, body.upper)
        if body.party == "increasing":
            price = price_for_increasing(frame, body.target)
        else:
            price = price_for_decreasing(frame, body.target)
        return {"schema_version": SCHEMA_VERSION, "price": price}

    @app.post("/v1/ledger")
    def ledger_endpoint(body: LedgerRequest):
        if not body.records:
            raise EmptyLedgerError("ledger request carries no records")
        rule = DerivationRule(**body.rule.model_dump())
        scored = []
        errors = []
        for entry in body.records:
            record = DealRecord(**entry.model_dump())
            try:
                scored.append(evaluate_record(rule, record))
            except RecordError as exc:
                errors.append(
                    {
                        "label": exc.label,
                        "error_code": "unresolvable_record",
                        "message": exc.reason,
                    }
                )
        if not scored:
            return _problem(
                422,
                "all_records_invalid",
                f"none of the {len(body.records)} records could be evaluated",
            )
        summary = summarize(scored)
        return {
            "schema_version": SCHEMA_VERSION,
            "attributed": [record_payload(s) for s in scored],
            "summary": summary_payload(summary),
            "errors": errors,
        }

    @app.get("/v1/curve")
    def curve_endpoint(
        lower: float,
        upper: float,
        samples: int,
        start: float | None = None,
        end: float | None = None,
    ) -> dict:
        frame = NegotiationFrame(lower, upper)
        grid_start = frame.lower if start is None else start
        grid_end = frame.upper if end is None else end
        points = sample_curves(frame, grid_start, grid_end, samples)
        return {
            "schema_version": SCHEMA_VERSION,
            "points": [[p.value, p.increasing_share, p.decreasing_share] for p in points],
        }

    if console_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app


app = create_app()
