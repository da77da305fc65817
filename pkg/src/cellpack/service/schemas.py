"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Algo = Literal["dp", "dp-lowmem", "fptas", "oracle", "kdim"]
ModelKind = Literal["basic", "sorted", "rc"]
ModelVariant = Literal["default", "relaxed"]


class InstanceIn(BaseModel):
    lengths: list[int] = Field(min_length=1, description="side lengths, any order")
    strip_width: int = Field(ge=1)


class InstanceOut(BaseModel):
    n: int
    strip_width: int
    lengths: list[int] = Field(description="side lengths in generation order")


class HealthResponse(BaseModel):
    status: str
    version: str


class GenerateRequest(BaseModel):
    n: int = Field(ge=1)
    seed: int
    count: int = Field(default=1, ge=1, le=1000, description="instances for seeds seed..seed+count-1")


class GeneratedInstance(BaseModel):
    seed: int
    instance: InstanceOut


class GenerateResponse(BaseModel):
    instances: list[GeneratedInstance]


class PartitionRequest(BaseModel):
    values: list[int] = Field(min_length=1)


class PartitionResponse(BaseModel):
    instance: InstanceOut
    lam: int = Field(description="decision threshold: optimal height iff the values split evenly")


class SolveRequest(BaseModel):
    instance: InstanceIn
    algo: Algo = "dp"
    eps: Optional[str] = Field(
        default=None, description="exact rational like '1/2' or '0.25'; required for fptas"
    )
    budgets: Optional[list[int]] = Field(
        default=None, description="per-dimension capacities for kdim; defaults to [strip_width]"
    )


class SolveResponse(BaseModel):
    algo: Algo
    height: int
    width: Optional[int] = None
    shape: Optional[tuple[int, ...]] = None
    sequence: Optional[str] = None
    feasible: bool = True
    elapsed_ms: float


class EmitRequest(BaseModel):
    instance: InstanceIn
    kind: ModelKind
    variant: ModelVariant = "default"


class EmitResponse(BaseModel):
    kind: ModelKind
    variant: ModelVariant
    text: str
    variable_count: int
    constraint_count: int


class VerifySequenceRequest(BaseModel):
    instance: InstanceIn
    sequence: str = Field(description="string over R (add row) and C (add column)")


class VerifySequenceResponse(BaseModel):
    width: int
    height: int
    strip_width: int
    feasible: bool


class VerifyAssignmentRequest(BaseModel):
    instance: InstanceIn
    kind: ModelKind
    variant: ModelVariant = "default"
    assignment: dict[str, int]


class VerifyAssignmentResponse(BaseModel):
    feasible: bool
    objective: int
    violated: list[str]


class RenderRequest(BaseModel):
    instance: InstanceIn
    sequence: str
    scale: Optional[float] = Field(default=None, gt=0)
