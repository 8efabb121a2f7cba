"""HTTP service exposing the exact conversion engine.

Error contract: malformed scalar/sequence encodings and unusable request
combinations return 400; requests that parse but are semantically invalid
(kind mismatch, sequence shorter than the order, bad parameter domain)
return 409; body-shape violations are pydantic's usual 422.  The CLI maps
400/422 to exit code 2 and 409 to exit code 3.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .bench import run_bench
from .distributions import distribution_moments, table_rows
from .encoding import ScalarParseError
from .scalars import Scalar
from .schemas import (
    BenchRequest,
    BenchResponse,
    BenchRowWire,
    ConvertRequest,
    DistributionSpec,
    MomentsRequest,
    SelftestRequest,
    SelftestResponse,
    SequenceResponse,
    SuiteWire,
    TableRequest,
    TableResponse,
    TableRowWire,
    scalar_to_wire,
    wire_to_scalar,
)
from .selftest import run_selftest
from .transforms import convert

app = FastAPI(title="cumulants", version=__version__)


def _decode_sequence(items) -> list[Scalar]:
    try:
        return [wire_to_scalar(v) for v in items]
    except ScalarParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _decode_params(spec: DistributionSpec) -> dict[str, Scalar]:
    try:
        return {k: wire_to_scalar(v) for k, v in spec.params.items()}
    except ScalarParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _semantic(exc: ValueError) -> HTTPException:
    return HTTPException(status_code=409, detail=str(exc))


def _distribution_sequence(spec: DistributionSpec, order: int):
    params = _decode_params(spec)
    inner = _decode_sequence(spec.inner) if spec.inner is not None else None
    try:
        return distribution_moments(spec.name, params, order, inner=inner).values
    except ValueError as exc:
        raise _semantic(exc) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/convert", response_model=SequenceResponse)
def convert_endpoint(req: ConvertRequest) -> SequenceResponse:
    if (req.sequence is None) == (req.distribution is None):
        raise HTTPException(
            status_code=400, detail="supply exactly one of sequence or distribution"
        )
    try:
        if req.distribution is not None:
            if req.order is None:
                raise HTTPException(
                    status_code=400, detail="order is required with a distribution"
                )
            moments = _distribution_sequence(req.distribution, req.order)
            # a distribution enters in its requested basis: its moments when
            # converting from moments, else its cumulants of that kind
            values = convert("moments", req.from_kind, moments, parallel=req.parallel)
            out = convert(req.from_kind, req.to_kind, values, parallel=req.parallel)
        else:
            values = _decode_sequence(req.sequence)
            out = convert(
                req.from_kind, req.to_kind, values, order=req.order, parallel=req.parallel
            )
    except ValueError as exc:
        raise _semantic(exc) from exc
    return SequenceResponse(values=[scalar_to_wire(x) for x in out])


@app.post("/moments", response_model=SequenceResponse)
def moments_endpoint(req: MomentsRequest) -> SequenceResponse:
    values = _distribution_sequence(req.distribution, req.order)
    return SequenceResponse(values=[scalar_to_wire(x) for x in values])


@app.post("/table", response_model=TableResponse, response_model_exclude_none=True)
def table_endpoint(req: TableRequest) -> TableResponse:
    try:
        rows = table_rows(req.name, req.max_order)
    except ValueError as exc:
        raise _semantic(exc) from exc
    return TableResponse(
        rows=[
            TableRowWire(
                i=i,
                value=scalar_to_wire(value),
                catalan=None if cat is None else str(cat),
            )
            for i, value, cat in rows
        ]
    )


@app.post("/bench", response_model=BenchResponse)
def bench_endpoint(req: BenchRequest) -> BenchResponse:
    try:
        rows = run_bench(req.orders, repetitions=req.repetitions, input_kind=req.input)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return BenchResponse(
        rows=[
            BenchRowWire(order=r.order, terms=r.terms, median_ms=r.median_ms)
            for r in rows
        ]
    )


@app.post("/selftest", response_model=SelftestResponse, response_model_exclude_none=True)
def selftest_endpoint(req: SelftestRequest) -> SelftestResponse:
    try:
        report = run_selftest(max_order=req.max_order)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return SelftestResponse(
        passed=report.passed,
        max_order=report.max_order,
        suites=[SuiteWire(name=s.name, cases=s.cases) for s in report.suites],
        failure=report.failure,
    )
