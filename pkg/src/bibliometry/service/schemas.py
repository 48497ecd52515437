"""Request and response models for the HTTP service."""
from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str = "ok"
    name: str = "bibliometry"
    version: str


class MetricInfo(BaseModel):
    metric_id: str
    indicator: str
    dimension: str
    statistic: str
    description: str


class IndicatorListResponse(BaseModel):
    dimensions: list[str]
    indicators: list[str]
    metrics: list[MetricInfo]


class ConfigRequest(BaseModel):
    config_toml: str
    base_dir: str = "."


class ValidateConfigResponse(BaseModel):
    valid: bool
    errors: list[str] = Field(default_factory=list)
    stages: list[str] = Field(default_factory=list)
    output_dir: str = ""


class RunRequest(BaseModel):
    config_toml: str
    base_dir: str = "."
    # flag-level overrides applied on top of the parsed config
    stages: list[str] | None = None
    output_dir: str | None = None
    corpus: str | None = None
    contact_email: str | None = None


class StageReportModel(BaseModel):
    stage: str
    status: str
    outputs: list[str]
    skip_counts: dict[str, int]
    duration_seconds: float
    detail: dict[str, Any]


class RunResponse(BaseModel):
    status: str
    stages: list[StageReportModel]
    failing_stage: str | None = None
    error_category: str | None = None
    message: str = ""
    provenance: dict[str, Any] = Field(default_factory=dict)


class CorpusSummaryRequest(BaseModel):
    corpus_path: str


class CorpusSummaryResponse(BaseModel):
    n_works: int
    n_target_works: int
    n_authors: int
    windows: list[str]
    subfield_counts: dict[str, int]
    provenance: str


class ErrorBody(BaseModel):
    category: str
    message: str
    stage: str | None = None
