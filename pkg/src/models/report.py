# -*- coding: utf-8 -*-
"""Pydantic models for JSON output and verification reports."""

from pydantic import BaseModel, Field


class ExactCoeff(BaseModel):
    num: str
    den: str


class ComplexCoeff(BaseModel):
    re: str
    im: str


class TermOut(BaseModel):
    exponent: str
    coeff: ExactCoeff | ComplexCoeff


class BranchOut(BaseModel):
    branch_id: str
    ramification: int
    multiplicity: int
    exact: bool
    terms: list[TermOut] = Field(default_factory=list)
    truncation_order: str | None = None


class DiagnosticOut(BaseModel):
    kind: str
    message: str
    branch_id: str | None = None


class ExpansionReport(BaseModel):
    """JSON document of the expand subcommand."""

    input: str
    backend: str
    branches: list[BranchOut] = Field(default_factory=list)
    diagnostics: list[DiagnosticOut] = Field(default_factory=list)


class SegmentOut(BaseModel):
    start: list[str]
    end: list[str]
    gamma: str
    beta: str
    span: int
    characteristic: str


class PolygonReport(BaseModel):
    """JSON document of the polygon subcommand."""

    input: str
    support: list[list[str]] = Field(default_factory=list)
    chain: list[list[str]] = Field(default_factory=list)
    segments: list[SegmentOut] = Field(default_factory=list)


class BranchCheck(BaseModel):
    """Verification outcome of one branch."""

    branch_id: str
    series: str
    valuations: list[str] = Field(default_factory=list)
    monotone: bool
    oracle_agrees: bool
    residual_valuation: str
    numeric_slope: float | None = None
    slope_consistent: bool
    passed: bool
    notes: list[str] = Field(default_factory=list)


class VerificationReport(BaseModel):
    """JSON document of the verify subcommand."""

    input: str
    backend: str
    branches: list[BranchCheck] = Field(default_factory=list)
    passed: bool = True
