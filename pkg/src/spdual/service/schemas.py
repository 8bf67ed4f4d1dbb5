"""Request and response models for the HTTP service.

Rationals travel as strings ("p" or "p/q"); models reject any other
number format at the edge, so handlers only ever see exact values.
Classification violations are not rejected here: a well-formed document
with a bad tuple is a 200 from /validate and a 400 from the math
endpoints, never a 422.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core import rational_parse
from ..verify import DEFAULT_ALPHAS, MUTATIONS, SuiteConfig
from ..core import GroupFamily

GroupName = Literal["metaplectic", "gspin_odd"]

DEFAULT_ALPHA_STRINGS = [str(a) for a in DEFAULT_ALPHAS]


def _check_rational(value: str, where: str) -> str:
    try:
        rational_parse(value)
    except ValueError as exc:
        raise ValueError(f"{where}: {exc}") from exc
    return value


class LineSpec(BaseModel):
    """One cuspidal line of a representation document."""

    rho: str = Field(min_length=1)
    alpha: str
    tuple: list[str]

    @field_validator("alpha")
    @classmethod
    def _alpha_format(cls, v: str) -> str:
        return _check_rational(v, "alpha")

    @field_validator("tuple")
    @classmethod
    def _tuple_format(cls, v: list[str]) -> list[str]:
        return [_check_rational(x, f"tuple[{i}]") for i, x in enumerate(v)]


class RepSpecDocument(BaseModel):
    """A representation datum in document form."""

    group: GroupName
    cuspidal_support: str = Field(min_length=1)
    central_character: Optional[str] = None
    lines: list[LineSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def _central_character_family(self) -> "RepSpecDocument":
        if self.central_character is not None and self.group != "gspin_odd":
            raise ValueError("central_character applies to the gspin_odd group only")
        return self


class ViolationModel(BaseModel):
    code: str
    message: str
    where: str = ""


class ValidationReportModel(BaseModel):
    ok: bool
    violations: list[ViolationModel]
    warnings: list[str] = Field(default_factory=list)


class SegmentModel(BaseModel):
    rho: str
    lo: str
    hi: str


class DualResponse(BaseModel):
    """Aubert dual as a Langlands datum plus rendered forms."""

    group: GroupName
    cuspidal_support: str
    central_character: Optional[str] = None
    segments: list[SegmentModel]
    text: str
    latex: str


class MuStarTermModel(BaseModel):
    gl: list[SegmentModel]
    sp: RepSpecDocument
    multiplicity: int
    text: str
    latex: str


class MuStarResponse(BaseModel):
    count: int
    terms: list[MuStarTermModel]


class EnumerateRequest(BaseModel):
    """Enumerate admissible single-line tuples with a_k <= alpha - 1 + max_offset."""

    alpha: str
    max_offset: int = Field(4, ge=0)
    rho: str = "rho1"
    group: GroupName = "metaplectic"
    cuspidal_support: str = "sigma_cusp"
    with_duals: bool = False

    @field_validator("alpha")
    @classmethod
    def _alpha_value(cls, v: str) -> str:
        _check_rational(v, "alpha")
        if rational_parse(v) < 0:
            raise ValueError(f"alpha = {v} must be >= 0")
        return v


class EnumeratedDual(BaseModel):
    tuple: list[str]
    segments: list[SegmentModel]
    text: str
    latex: str


class EnumerateResponse(BaseModel):
    alpha: str
    count: int
    tuples: list[list[str]]
    duals: Optional[list[EnumeratedDual]] = None


class VerifyRequest(BaseModel):
    """Configuration for one self-verification run."""

    alphas: list[str] = Field(default_factory=lambda: list(DEFAULT_ALPHA_STRINGS))
    max_offset: int = Field(4, ge=0)
    families: list[GroupName] = Field(
        default_factory=lambda: ["metaplectic", "gspin_odd"]
    )
    max_lines: int = Field(3, ge=1)
    seed: int = 0
    samples: int = Field(200, ge=0)
    mutation: Optional[str] = None

    @field_validator("alphas")
    @classmethod
    def _alphas_value(cls, v: list[str]) -> list[str]:
        if not v:
            raise ValueError("alphas must be nonempty")
        for i, a in enumerate(v):
            _check_rational(a, f"alphas[{i}]")
            if rational_parse(a) < 0:
                raise ValueError(f"alphas[{i}] = {a} must be >= 0")
        return v

    @field_validator("families")
    @classmethod
    def _families_value(cls, v: list[str]) -> list[str]:
        if not v:
            raise ValueError("families must be nonempty")
        return v

    @field_validator("mutation")
    @classmethod
    def _mutation_known(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in MUTATIONS:
            raise ValueError(f"unknown mutation {v!r}; known: {sorted(MUTATIONS)}")
        return v

    def to_config(self) -> SuiteConfig:
        return SuiteConfig(
            alphas=tuple(rational_parse(a) for a in self.alphas),
            max_offset=self.max_offset,
            families=tuple(GroupFamily(f) for f in self.families),
            max_lines=self.max_lines,
            seed=self.seed,
            samples=self.samples,
            mutation=self.mutation,
        )


class CounterexampleModel(BaseModel):
    check: str
    input: dict
    expected: str
    actual: str


class CheckResultModel(BaseModel):
    name: str
    checked: int
    failures: int
    counterexamples: list[CounterexampleModel]


class VerifyResponse(BaseModel):
    ok: bool
    wall_time: float
    tuples_enumerated: int
    samples_run: int
    checks: list[CheckResultModel]


class HealthResponse(BaseModel):
    status: str
    version: str
