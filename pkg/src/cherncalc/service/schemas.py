"""Request and response models for the compute service.

Requests carry plain JSON data (classes as root-coefficient vectors,
partitions as part lists) plus the knobs a computation needs; responses
mirror the library's canonical JSON forms.  Size bounds on the inputs keep
single requests desk-scale — the combinatorial operations grow binomially
in the line count and exterior-power index.
"""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, field_validator

from ..chern_roots import KClass
from ..partitions import as_partition

MAX_LINES = 16
MAX_ROOTS = 12
MAX_ROOT_COEFF = 16
MAX_DEGREE = 12


def _canonical_partition(parts: list[int]) -> list[int]:
    p = as_partition(parts)
    if sum(p) > 16:
        raise ValueError("partition weight is limited to 16")
    return list(p)


PartitionField = Annotated[list[int], AfterValidator(_canonical_partition)]


class KClassModel(BaseModel):
    """A virtual class: one integer root-coefficient vector per line."""

    pos: list[list[int]] = Field(default_factory=list, max_length=MAX_LINES)
    neg: list[list[int]] = Field(default_factory=list, max_length=MAX_LINES)

    @field_validator("pos", "neg")
    @classmethod
    def _bounded_lines(cls, lines: list[list[int]]) -> list[list[int]]:
        for vec in lines:
            if len(vec) > MAX_ROOTS:
                raise ValueError(f"a line may combine at most {MAX_ROOTS} roots")
            if any(abs(c) > MAX_ROOT_COEFF for c in vec):
                raise ValueError(f"root coefficients are limited to |c| <= {MAX_ROOT_COEFF}")
        return lines

    def to_kclass(self) -> KClass:
        return KClass.from_json({"pos": self.pos, "neg": self.neg})

    @classmethod
    def from_kclass(cls, x: KClass, roots: int | None = None) -> "KClassModel":
        return cls.model_validate(x.to_json(roots))


class TermModel(BaseModel):
    exps: list[int]
    coeff: str


class PolyModel(BaseModel):
    vars: list[str]
    terms: list[TermModel]


class SeriesModel(BaseModel):
    """Truncated series 1 + f_1 t + ...: coefficient i is the t^i part."""

    degree: int
    coefficients: list[PolyModel]


# -- requests ------------------------------------------------------------------


class ChernTotalRequest(BaseModel):
    x: KClassModel
    degree: int = Field(default=8, ge=1, le=MAX_DEGREE)
    roots: int | None = Field(default=None, ge=0, le=MAX_ROOTS)


class TensorRequest(BaseModel):
    x: KClassModel
    y: KClassModel


class LambdaRequest(BaseModel):
    k: int = Field(ge=0, le=8)
    x: KClassModel


class DualRequest(BaseModel):
    x: KClassModel


class SchurRequest(BaseModel):
    mu: PartitionField
    x: KClassModel

    @field_validator("mu")
    @classmethod
    def _schur_sized(cls, mu: list[int]) -> list[int]:
        if len(mu) > 4 or sum(mu) > 8:
            raise ValueError("schur operations are limited to <= 4 parts, weight <= 8")
        return mu


class UniversalPolyRequest(BaseModel):
    n: int = Field(ge=1, le=6)
    m: int = Field(ge=1, le=6)
    i: int = Field(ge=1, le=8)


class LrRequest(BaseModel):
    mu: PartitionField
    eps: PartitionField
    nu: PartitionField


class GammaDegreeRequest(BaseModel):
    x: KClassModel
    degree: int = Field(default=8, ge=1, le=MAX_DEGREE)
    roots: int | None = Field(default=None, ge=0, le=MAX_ROOTS)


class GammaSeriesRequest(BaseModel):
    x: KClassModel
    degree: int = Field(default=8, ge=1, le=MAX_DEGREE)
    roots: int | None = Field(default=None, ge=0, le=MAX_ROOTS)


class GrassmannianRequest(BaseModel):
    m: int = Field(ge=1, le=11)
    n: int = Field(ge=2, le=12)


class GrrVerifyRequest(BaseModel):
    max_i: int = Field(default=5, ge=1, le=6)
    degree: int | None = Field(default=None, ge=1, le=10)
    seed: int = Field(default=0, ge=-(2**31), le=2**31 - 1)


# -- responses ------------------------------------------------------------------


class CoefficientResponse(BaseModel):
    coefficient: int


class RankResponse(BaseModel):
    rank: int


class FiltrationDegreeResponse(BaseModel):
    degree: int | Literal["inf"]


class HealthResponse(BaseModel):
    status: str


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    case: str
    inputs: dict[str, int]
    expected: PolyModel
    actual: PolyModel
    passed: bool = Field(alias="pass")


class PresentationChecks(BaseModel):
    relations_vanish: bool
    rank_matches: bool
    series_inverse: bool


class PresentationResponse(BaseModel):
    generators: list[str]
    relations: list[PolyModel]
    rank: int
    checks: PresentationChecks
