"""FastAPI service wrapping the analytics core.

The service owns all pipeline execution and corpus inspection; the CLI
is a thin client of these endpoints. Error responses carry the error
category (config / network / data) that clients map onto exit codes.
"""
from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..corpus.io import read_corpus
from ..errors import BibliometryError, ConfigError
from ..pipeline.config import check_referenced_files, parse_config
from ..pipeline.registry import INDICATORS, REGISTRY
from ..pipeline.runner import run_pipeline
from .schemas import (ConfigRequest, CorpusSummaryRequest,
                      CorpusSummaryResponse, HealthResponse,
                      IndicatorListResponse, MetricInfo, RunRequest,
                      RunResponse, ValidateConfigResponse)

_STATUS_BY_CATEGORY = {"config": 400, "data": 422, "network": 502}


def create_app() -> FastAPI:
    app = FastAPI(title="bibliometry", version=__version__)

    @app.exception_handler(BibliometryError)
    async def _domain_error(request: Request, exc: BibliometryError):
        return JSONResponse(
            status_code=_STATUS_BY_CATEGORY.get(exc.category, 422),
            content={"category": exc.category, "message": str(exc),
                     "stage": None})

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(version=__version__)

    @app.get("/indicators", response_model=IndicatorListResponse)
    def indicators():
        return IndicatorListResponse(
            dimensions=sorted({s.dimension for s in REGISTRY
                               if s.dimension != "descriptive"}),
            indicators=list(INDICATORS),
            metrics=[MetricInfo(metric_id=s.metric_id, indicator=s.indicator,
                                dimension=s.dimension, statistic=s.statistic,
                                description=s.description)
                     for s in REGISTRY],
        )

    @app.post("/config/validate", response_model=ValidateConfigResponse)
    def validate_config(request: ConfigRequest):
        try:
            config = parse_config(request.config_toml)
        except ConfigError as exc:
            return ValidateConfigResponse(valid=False, errors=[str(exc)])
        errors = check_referenced_files(config, Path(request.base_dir))
        return ValidateConfigResponse(valid=not errors, errors=errors,
                                      stages=config.run.stages,
                                      output_dir=config.run.output_dir)

    @app.post("/pipeline/run", response_model=RunResponse)
    def pipeline_run(request: RunRequest):
        config = parse_config(request.config_toml)
        config = _apply_overrides(config, request)
        report = run_pipeline(config, Path(request.base_dir))
        return RunResponse(**report.to_dict())

    @app.post("/corpus/summary", response_model=CorpusSummaryResponse)
    def corpus_summary(request: CorpusSummaryRequest):
        path = Path(request.corpus_path)
        if not path.exists():
            raise ConfigError(f"corpus file not found: {path}")
        corpus = read_corpus(path)
        targets = list(corpus.iter_target_works())
        counts: dict[str, int] = {}
        for work in targets:
            counts[work.subfield.value] = counts.get(work.subfield.value, 0) + 1
        return CorpusSummaryResponse(
            n_works=len(corpus), n_target_works=len(targets),
            n_authors=len(corpus.authors),
            windows=[w.label for w in corpus.windows],
            subfield_counts=counts, provenance=corpus.provenance)

    return app


def _apply_overrides(config, request: RunRequest):
    updates = {}
    if request.stages is not None:
        updates["run"] = config.run.model_copy(update={"stages": request.stages})
    if request.output_dir is not None:
        section = updates.get("run", config.run)
        updates["run"] = section.model_copy(update={"output_dir": request.output_dir})
    if request.corpus is not None:
        updates["build"] = config.build.model_copy(update={"corpus": request.corpus})
    if request.contact_email is not None:
        updates["harvest"] = config.harvest.model_copy(
            update={"contact_email": request.contact_email})
    if not updates:
        return config
    config = config.model_copy(update=updates)
    # re-validate the overridden sections (stage names, ordering)
    return parse_config_roundtrip(config)


def parse_config_roundtrip(config):
    from ..pipeline.config import RunConfig
    try:
        return RunConfig(**config.model_dump())
    except Exception as exc:   # pydantic ValidationError
        raise ConfigError(f"invalid override: {exc}") from exc
