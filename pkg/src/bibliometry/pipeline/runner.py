"""Pipeline orchestration: harvest -> build -> metrics -> export.

Stages run in canonical order, each one idempotent given cached inputs.
A stage failure halts the run; the report names the failing stage and
its error category so callers can map it onto an exit code. Timings live
only in the run report, never inside data files, which keeps reruns
byte-identical under the exports tree.
"""
from __future__ import annotations

import concurrent.futures
import hashlib
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

import httpx

from .. import __version__
from ..corpus.io import read_corpus, write_corpus
from ..corpus.models import Corpus, canonical_venue
from ..errors import (BibliometryError, ConfigError, PreconditionError,
                      TransientFetchError)
from ..harvest.client import (EXPAND_BOTH, FetchPolicy, WorkCache,
                              WorkNotFoundError, WorksClient,
                              expand_citation_neighborhood, to_work_record)
from ..harvest.industry import IndustryKeywordList
from ..harvest.listing import SkipRecord, filter_dois, parse_dblp_listing
from .config import RunConfig, check_referenced_files, resolve
from .exports import EXPORT_SCHEMA_VERSION, export_all, write_csv
from .metrics import compute_metrics, read_bundle, write_bundle

STATUS_OK = "ok"
STATUS_PARTIAL = "partial"
STATUS_FAILED = "failed"


@dataclass
class StageReport:
    stage: str
    status: str
    outputs: list[str] = field(default_factory=list)
    skip_counts: dict[str, int] = field(default_factory=dict)
    duration_seconds: float = 0.0
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"stage": self.stage, "status": self.status,
                "outputs": self.outputs, "skip_counts": self.skip_counts,
                "duration_seconds": self.duration_seconds,
                "detail": self.detail}


@dataclass
class RunReport:
    status: str
    stages: list[StageReport] = field(default_factory=list)
    failing_stage: str | None = None
    error_category: str | None = None
    message: str = ""
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"status": self.status,
                "stages": [s.to_dict() for s in self.stages],
                "failing_stage": self.failing_stage,
                "error_category": self.error_category,
                "message": self.message,
                "provenance": self.provenance}


class _Paths:
    def __init__(self, config: RunConfig, base_dir: Path):
        self.base_dir = Path(base_dir)
        self.out = resolve(self.base_dir, config.run.output_dir)
        self.corpus = self.out / "corpus" / "corpus.jsonl"
        self.skip_report = self.out / "harvest" / "skip_report.csv"
        self.harvest_provenance = self.out / "harvest" / "provenance.json"
        self.metrics = self.out / "metrics" / "metrics.json"
        self.exports = self.out / "exports"
        self.run_report = self.out / "run_report.json"

    def rel(self, path: Path) -> str:
        try:
            return str(Path(path).relative_to(self.out))
        except ValueError:
            return str(path)


def _load_keywords(config: RunConfig, base_dir: Path) -> IndustryKeywordList:
    if config.harvest.keyword_file:
        return IndustryKeywordList.from_file(
            resolve(base_dir, config.harvest.keyword_file))
    return IndustryKeywordList.default()


def _policy(config: RunConfig, paths: _Paths) -> FetchPolicy:
    h = config.harvest
    return FetchPolicy(
        max_concurrent_requests=h.max_concurrent_requests,
        min_request_interval=h.min_request_interval_ms / 1000.0,
        max_retries=h.max_retries,
        backoff=h.backoff,
        contact_email=h.contact_email,
        base_url=h.api_base_url,
        citer_page_cap=h.citer_page_cap,
    )


def _read_listing(source, config: RunConfig, base_dir: Path,
                  transport) -> str:
    if source.path:
        return resolve(base_dir, source.path).read_text(encoding="utf-8")
    base = config.harvest.listing_base_url
    url = source.url if not base else base.rstrip("/") + "/" + source.url.lstrip("/")
    with httpx.Client(transport=transport, timeout=30.0) as client:
        response = client.get(url)
        response.raise_for_status()
        return response.text


def _stage_harvest(config: RunConfig, paths: _Paths, transport) -> StageReport:
    keywords = _load_keywords(config, paths.base_dir)
    policy = _policy(config, paths)
    cache_dir = (resolve(paths.base_dir, config.harvest.cache_dir)
                 if config.harvest.cache_dir else paths.out / "cache")
    cache = WorkCache(cache_dir)

    entries = []
    for source in config.harvest.listings:
        source.check()
        raw = _read_listing(source, config, paths.base_dir, transport)
        entries.extend(parse_dblp_listing(raw, canonical_venue(source.venue)
                                          or source.venue, source.year))
    dois, skips = filter_dois(entries, min_pages=config.harvest.min_pages)
    venue_by_doi = {}
    for entry in entries:
        if entry.doi and entry.doi not in venue_by_doi:
            venue_by_doi[entry.doi] = entry.venue_key

    partial = False
    seeds = []
    with WorksClient(policy, cache, transport=transport) as client:
        with concurrent.futures.ThreadPoolExecutor(
                max_workers=policy.max_concurrent_requests) as pool:
            futures = {pool.submit(client.fetch_raw_work, doi): doi
                       for doi in dois}
            payload_by_doi = {}
            for future in concurrent.futures.as_completed(futures):
                doi = futures[future]
                try:
                    payload_by_doi[doi] = future.result()
                except WorkNotFoundError:
                    skips.append(SkipRecord(doi, "fetch", "not-found"))
                except (TransientFetchError, BibliometryError) as exc:
                    partial = True
                    skips.append(SkipRecord(doi, "fetch", type(exc).__name__))
        for doi in dois:   # deterministic seed order regardless of completion
            if doi in payload_by_doi:
                seeds.append(to_work_record(payload_by_doi[doi],
                                            venue_key=venue_by_doi[doi],
                                            keywords=keywords))

        windows = config.build.windows()
        provenance = (config.build.provenance
                      or f"harvest of {len(config.harvest.listings)} listings, "
                         f"keywords sha256:{keywords.sha256[:12]}")
        if config.harvest.expand == "none":
            corpus = Corpus.from_works(seeds, windows, provenance)
        else:
            result = expand_citation_neighborhood(
                seeds, policy, config.harvest.expand, cache=cache,
                client=client, windows=windows, keywords=keywords,
                provenance=provenance)
            corpus = result.corpus
            skips.extend(result.skips)
            partial = partial or result.partial

    write_corpus(corpus, paths.corpus)
    write_csv(paths.skip_report, ["doi", "stage", "reason"],
              [(s.doi, s.stage, s.reason) for s in skips])
    paths.harvest_provenance.parent.mkdir(parents=True, exist_ok=True)
    paths.harvest_provenance.write_text(json.dumps({
        "keyword_file_sha256": keywords.sha256,
        "policy": {
            "max_concurrent_requests": policy.max_concurrent_requests,
            "min_request_interval": policy.min_request_interval,
            "max_retries": policy.max_retries,
            "backoff": policy.backoff,
            "citer_page_cap": policy.citer_page_cap,
            "base_url": policy.base_url,
        },
        "expand": config.harvest.expand,
        "listings": [{"venue": s.venue, "year": s.year,
                      "source": s.path or s.url}
                     for s in config.harvest.listings],
        "n_seed_dois": len(dois),
        "n_works": len(corpus),
    }, sort_keys=True, indent=2) + "\n", encoding="utf-8")

    counts: dict[str, int] = {}
    for skip in skips:
        counts[skip.reason] = counts.get(skip.reason, 0) + 1
    return StageReport(
        "harvest", STATUS_PARTIAL if partial else STATUS_OK,
        outputs=[paths.rel(p) for p in (paths.corpus, paths.skip_report,
                                        paths.harvest_provenance)],
        skip_counts=counts,
        detail={"n_seeds": len(seeds), "n_works": len(corpus)})


def _stage_build(config: RunConfig, paths: _Paths, harvested: bool) -> StageReport:
    if harvested:
        source = paths.corpus
    elif config.build.corpus:
        source = resolve(paths.base_dir, config.build.corpus)
    else:
        raise PreconditionError("build stage needs build.corpus or a prior "
                                "harvest stage")
    if not source.exists():
        raise PreconditionError(f"corpus file not found: {source}")
    windows = config.build.windows()
    corpus = read_corpus(source, windows=windows,
                         provenance=config.build.provenance or None)
    detail = {"n_works": len(corpus), "n_authors": len(corpus.authors),
              "n_windows": len(windows)}
    if source.resolve() != paths.corpus.resolve():
        write_corpus(corpus, paths.corpus)
    return StageReport("build", STATUS_OK, outputs=[paths.rel(paths.corpus)],
                       detail=detail)


def _stage_metrics(config: RunConfig, paths: _Paths) -> StageReport:
    if not paths.corpus.exists():
        raise PreconditionError(
            f"corpus not found at {paths.corpus}; run the build stage first")
    corpus = read_corpus(paths.corpus, windows=config.build.windows())
    bundle = compute_metrics(corpus, config.metrics)
    write_bundle(bundle, paths.metrics)
    return StageReport("metrics", STATUS_OK,
                       outputs=[paths.rel(paths.metrics)],
                       detail={"n_scalar_rows": len(bundle.scalars),
                               "n_sample_series": len(bundle.samples),
                               "n_tables": len(bundle.tables)})


def _stage_export(config: RunConfig, paths: _Paths) -> StageReport:
    if not paths.metrics.exists():
        raise PreconditionError(
            f"metrics cache not found at {paths.metrics}; "
            f"run the metrics stage first")
    bundle = read_bundle(paths.metrics)
    written = export_all(bundle, paths.exports, enabled=config.metrics.enabled)
    detail = {"export_schema_version": EXPORT_SCHEMA_VERSION,
              "n_files": len(written)}
    if config.metrics.enabled:
        from .registry import all_metric_ids
        detail["excluded_metrics"] = sorted(set(all_metric_ids())
                                            - set(config.metrics.enabled))
    return StageReport("export", STATUS_OK,
                       outputs=sorted(paths.rel(p) for p in written),
                       detail=detail)


def run_pipeline(config: RunConfig, base_dir: Path,
                 transport: httpx.BaseTransport | None = None) -> RunReport:
    """Execute the configured stages in order and write the run report.

    Never raises for stage failures; the report carries the failing stage
    and error category instead.
    """
    paths = _Paths(config, base_dir)
    report = RunReport(status=STATUS_OK, provenance={
        "engine_version": __version__,
        "config_sha256": hashlib.sha256(
            config.model_dump_json().encode()).hexdigest(),
    })

    errors = check_referenced_files(config, paths.base_dir)
    if errors:
        report.status = STATUS_FAILED
        report.failing_stage = "validate"
        report.error_category = ConfigError.category
        report.message = "; ".join(errors)
        _write_report(report, paths)
        return report

    harvested = False
    for stage in config.run.stages:
        started = time.perf_counter()
        try:
            if stage == "harvest":
                stage_report = _stage_harvest(config, paths, transport)
                harvested = True
            elif stage == "build":
                stage_report = _stage_build(config, paths, harvested)
            elif stage == "metrics":
                stage_report = _stage_metrics(config, paths)
            else:
                stage_report = _stage_export(config, paths)
        except BibliometryError as exc:
            duration = time.perf_counter() - started
            report.stages.append(StageReport(stage, STATUS_FAILED,
                                             duration_seconds=duration,
                                             detail={"error": str(exc)}))
            report.status = STATUS_FAILED
            report.failing_stage = stage
            report.error_category = exc.category
            report.message = str(exc)
            _write_report(report, paths)
            return report
        stage_report.duration_seconds = time.perf_counter() - started
        report.stages.append(stage_report)
        if stage_report.status == STATUS_PARTIAL:
            report.status = STATUS_PARTIAL

    _write_report(report, paths)
    return report


def _write_report(report: RunReport, paths: _Paths) -> None:
    paths.run_report.parent.mkdir(parents=True, exist_ok=True)
    paths.run_report.write_text(
        json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n",
        encoding="utf-8")
