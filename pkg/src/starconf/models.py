"""Pydantic models for every report the library and CLI emit."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class ConfigSummary(BaseModel):
    """Provenance of one star-configuration: parameters plus realized forms."""

    n: int
    r: int
    s: int
    degrees: list[int]
    seed: int
    prime: int
    kind: str = "general"
    forms: list[str] = Field(default_factory=list, description="Realized forms, text format")
    forms_sha256: str = ""
    reseeded: bool = False


class SliceCheck(BaseModel):
    """Generated ideal vs. intersection of the component ideals in one degree."""

    t: int
    dim_generated: int
    dim_oracle: int
    equal: bool


class IntersectionReport(BaseModel):
    config: ConfigSummary
    checks: list[SliceCheck] = Field(default_factory=list)
    passed: bool = False


class HilbertReport(BaseModel):
    config: ConfigSummary
    values: list[int]
    sigma: int | None = Field(default=None, description="None when no plateau within t_max")
    degree: int | None = Field(default=None, description="Point count, only for r = n")
    generic: list[int] | None = Field(default=None, description="Closed-form prediction, when one applies")
    matches_generic: bool | None = None
    predicted_from_betti: list[int] | None = None


class DegreeReport(BaseModel):
    config: ConfigSummary
    degree: int


class BettiEntry(BaseModel):
    step: int
    shift: int
    multiplicity: int


class BettiReport(BaseModel):
    config: ConfigSummary
    convention: str = "step l of the resolution of I corresponds to Tor_l(R/I, k)"
    predicted: list[BettiEntry] = Field(default_factory=list)
    oracle: list[BettiEntry] | None = None
    match: bool | None = None
    level: bool = True
    projective_dimension: int | None = None
    acm: bool | None = None
    euler_consistent: bool | None = None


class BdlRecord(BaseModel):
    t: int
    lhs: int = Field(description="H(R/I', t) computed by rank")
    rhs: int = Field(description="H_S(t) - H_S(t-d) + H_C(t-d)")
    equal: bool


class BdlReport(BaseModel):
    config: ConfigSummary | None = None
    form_degree: int
    records: list[BdlRecord] = Field(default_factory=list)
    holds: bool = False
    reproduces_star: bool | None = Field(
        default=None, description="Linked ideal equals the (r,s) star ideal slicewise"
    )


class WlpDegree(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    t: int
    dim_a_t: int = Field(alias="dimA_t")
    dim_a_t1: int = Field(alias="dimA_t1")
    rank: int
    maximal: bool


class WlpReport(BaseModel):
    """Maximal-rank records of multiplication by one linear form on R/J."""

    ideal_summary: str
    element: str
    degrees: list[WlpDegree] = Field(default_factory=list)
    verdict: bool = False
    socle_degree: int = 0
    status: Literal["theorem", "experimental"] = "theorem"
    note: str = ""
    configs: list[ConfigSummary] = Field(default_factory=list)
    hilbert: list[int] = Field(default_factory=list, description="H(R/J, t) up to the first zero")
    criterion_holds: bool | None = Field(
        default=None,
        description="H_A(i) = H_X(i) for all i <= sigma(X) - 1, for X or Y",
    )
    element_check: WlpReport | None = Field(
        default=None, description="Same algebra with the prescribed Lefschetz element"
    )


class IdentityRecord(BaseModel):
    t: int
    lhs: int
    rhs: int
    equal: bool


class UnionHfReport(BaseModel):
    configs: list[ConfigSummary]
    union: list[int]
    x: list[int]
    y: list[int]
    identity: list[IdentityRecord] = Field(default_factory=list)


class DimensionCheck(BaseModel):
    label: str
    degree: int
    expected: int
    actual: int
    equal: bool


class DimensionReport(BaseModel):
    configs: list[ConfigSummary] = Field(default_factory=list)
    checks: list[DimensionCheck] = Field(default_factory=list)
    passed: bool = False


class SuiteCell(BaseModel):
    key: str
    criterion: str
    passed: bool
    reseeded: bool = False
    experimental: bool = False
    detail: str = ""


class SuiteReport(BaseModel):
    grid: str
    seed: int
    prime: int
    cells: list[SuiteCell] = Field(default_factory=list)
    passed: bool = False


WlpReport.model_rebuild()
