"""Run configuration: one TOML document with one table per stage.

Unknown keys fail fast, referenced files must exist at validation time,
and every numeric parameter is range-checked up front so stage code can
trust its inputs.
"""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..corpus.models import Subfield
from ..errors import ConfigError

STAGE_ORDER = ("harvest", "build", "metrics", "export")


class ListingSource(BaseModel):
    model_config = ConfigDict(extra="forbid")

    venue: str
    year: int = Field(ge=1960, le=2100)
    path: str = ""
    url: str = ""

    @field_validator("venue")
    @classmethod
    def _known_venue(cls, value: str) -> str:
        from ..corpus.models import canonical_venue
        if canonical_venue(value) is None:
            raise ValueError(f"unknown venue key {value!r}")
        return value

    def check(self) -> None:
        if bool(self.path) == bool(self.url):
            raise ConfigError(
                f"listing {self.venue} {self.year}: exactly one of path/url required")


class RunSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    stages: list[Literal["harvest", "build", "metrics", "export"]] = \
        Field(default=["build", "metrics", "export"], min_length=1)
    output_dir: str = "out"

    @field_validator("stages")
    @classmethod
    def _canonical_order(cls, value: list[str]) -> list[str]:
        if len(set(value)) != len(value):
            raise ValueError("duplicate stage")
        return sorted(value, key=STAGE_ORDER.index)


class HarvestSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    listings: list[ListingSource] = Field(default_factory=list)
    api_base_url: str = "https://api.openalex.org"
    listing_base_url: str = ""      # overrides scheme/host for listing URLs
    contact_email: str = ""
    min_pages: int = Field(default=7, ge=1)
    keyword_file: str = ""          # empty -> packaged default list
    expand: Literal["references", "citers", "both", "none"] = "both"
    max_concurrent_requests: int = Field(default=4, ge=1, le=64)
    min_request_interval_ms: float = Field(default=50.0, gt=0)
    max_retries: int = Field(default=3, ge=0, le=10)
    backoff: float = Field(default=2.0, ge=1.0)
    citer_page_cap: int = Field(default=0, ge=0)
    cache_dir: str = ""             # empty -> <output_dir>/cache


class BuildSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    corpus: str = ""                # input JSONL; harvest output when harvesting
    window_start: int = Field(default=2000, ge=1900, le=2100)
    window_end: int = Field(default=2024, ge=1900, le=2100)
    window_width: int = Field(default=5, ge=1)
    provenance: str = ""

    def windows(self):
        from ..corpus.windows import make_window_partition
        if self.window_end < self.window_start:
            raise ConfigError("build.window_end precedes build.window_start")
        return make_window_partition(self.window_start, self.window_end,
                                     self.window_width)


class MetricsSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    subfields: list[str] = Field(default_factory=list)   # empty -> all five
    velocity_threshold: int = Field(default=25, ge=1)
    high_impact_threshold: int = Field(default=100, ge=1)
    clustering_top_k: int = Field(default=1000, ge=1)
    stability_top_k: int = Field(default=3000, ge=1)
    mobility_top_k: int = Field(default=3000, ge=1)
    js_log_base: float = Field(default=2.0, gt=1.0)
    migration_top_n: int = Field(default=15, ge=1)
    top_collaborators_k: int = Field(default=15, ge=1)
    enabled: list[str] = Field(default_factory=list)     # empty -> all metrics

    @field_validator("subfields")
    @classmethod
    def _known_subfields(cls, value: list[str]) -> list[str]:
        for code in value:
            try:
                Subfield(code)
            except ValueError:
                raise ValueError(f"unknown subfield code {code!r}")
        return value

    @field_validator("enabled")
    @classmethod
    def _known_metrics(cls, value: list[str]) -> list[str]:
        from .registry import all_metric_ids
        unknown = sorted(set(value) - set(all_metric_ids()))
        if unknown:
            raise ValueError(f"unknown metric ids: {unknown}")
        return value

    def selected_subfields(self) -> list[Subfield]:
        if not self.subfields:
            return list(Subfield)
        return [Subfield(code) for code in self.subfields]


class ExportSection(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    run: RunSection = Field(default_factory=RunSection)
    harvest: HarvestSection = Field(default_factory=HarvestSection)
    build: BuildSection = Field(default_factory=BuildSection)
    metrics: MetricsSection = Field(default_factory=MetricsSection)
    export: ExportSection = Field(default_factory=ExportSection)


def parse_config(text: str) -> RunConfig:
    """TOML text to a validated RunConfig; all failures become ConfigError."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML: {exc}") from exc
    try:
        return RunConfig(**data)
    except ValidationError as exc:
        lines = [f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}"
                 for e in exc.errors()]
        raise ConfigError("invalid config: " + "; ".join(lines)) from exc


def load_config(path: Path) -> RunConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def resolve(base_dir: Path, value: str) -> Path:
    path = Path(value)
    return path if path.is_absolute() else Path(base_dir) / path


def check_referenced_files(config: RunConfig, base_dir: Path) -> list[str]:
    """Existence checks for files the configured stages will read."""
    errors: list[str] = []
    stages = config.run.stages
    if "harvest" in stages:
        if not config.harvest.listings:
            errors.append("harvest stage configured but harvest.listings is empty")
        for listing in config.harvest.listings:
            try:
                listing.check()
            except ConfigError as exc:
                errors.append(str(exc))
                continue
            if listing.path and not resolve(base_dir, listing.path).exists():
                errors.append(f"listing file not found: {listing.path}")
    elif "build" in stages:
        if not config.build.corpus:
            errors.append("build stage without harvest requires build.corpus")
        elif not resolve(base_dir, config.build.corpus).exists():
            errors.append(f"corpus file not found: {config.build.corpus}")
    if config.harvest.keyword_file:
        if not resolve(base_dir, config.harvest.keyword_file).exists():
            errors.append(f"keyword file not found: {config.harvest.keyword_file}")
    try:
        config.build.windows()
    except ConfigError as exc:
        errors.append(str(exc))
    return errors
