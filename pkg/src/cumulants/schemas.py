"""Pydantic request/response models shared by the service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .encoding import encode_scalar, parse_scalar
from .scalars import Scalar

KindName = Literal["moments", "classical", "boolean", "free"]
DistributionName = Literal[
    "poisson",
    "compound_poisson",
    "exponential",
    "uniform",
    "bernoulli",
    "binomial",
    "gaussian",
    "wigner",
    "marchenko_pastur",
]
TableName = Literal["wigner_catalan", "marchenko_pastur"]
BenchInput = Literal["rational", "symbolic"]


class PolynomialWire(BaseModel):
    """Polynomial scalar on the wire: coefficients by ascending degree."""

    symbol: str
    coeffs: list[str]


ScalarWire = Union[str, int, PolynomialWire]


def wire_to_scalar(v: ScalarWire) -> Scalar:
    if isinstance(v, PolynomialWire):
        return parse_scalar({"symbol": v.symbol, "coeffs": list(v.coeffs)})
    return parse_scalar(v)


def scalar_to_wire(x: Scalar) -> Union[str, PolynomialWire]:
    enc = encode_scalar(x)
    if isinstance(enc, dict):
        return PolynomialWire(**enc)
    return enc


class DistributionSpec(BaseModel):
    name: DistributionName
    params: dict[str, ScalarWire] = Field(default_factory=dict)
    inner: Optional[list[ScalarWire]] = None


class ConvertRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_kind: KindName = Field(alias="from")
    to_kind: KindName = Field(alias="to")
    sequence: Optional[list[ScalarWire]] = None
    distribution: Optional[DistributionSpec] = None
    order: Optional[int] = Field(default=None, ge=1)
    parallel: bool = False


class MomentsRequest(BaseModel):
    distribution: DistributionSpec
    order: int = Field(ge=1)


class SequenceResponse(BaseModel):
    values: list[Union[str, PolynomialWire]]


class TableRequest(BaseModel):
    name: TableName
    max_order: int = Field(default=8, ge=1)


class TableRowWire(BaseModel):
    i: int
    value: Union[str, PolynomialWire]
    catalan: Optional[str] = None


class TableResponse(BaseModel):
    rows: list[TableRowWire]


class BenchRequest(BaseModel):
    orders: list[int]
    repetitions: int = Field(default=5, ge=1)
    input: BenchInput = "rational"


class BenchRowWire(BaseModel):
    order: int
    terms: int
    median_ms: float


class BenchResponse(BaseModel):
    rows: list[BenchRowWire]


class SelftestRequest(BaseModel):
    max_order: int = Field(default=8)


class SuiteWire(BaseModel):
    name: str
    cases: int


class SelftestResponse(BaseModel):
    passed: bool
    max_order: int
    suites: list[SuiteWire]
    failure: Optional[str] = None
