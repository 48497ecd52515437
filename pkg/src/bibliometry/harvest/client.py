"""Metadata-provider client: polite fetching, caching, neighborhood expansion.

Works are fetched by DOI or provider id from an OpenAlex-compatible works
endpoint. Every successful payload is cached by its lookup key, so a
second run resolves entirely from cache and produces a byte-identical
corpus. Requests honor a global minimum interval and retry transient
failures with multiplicative backoff.
"""
from __future__ import annotations

import concurrent.futures
import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import quote

import httpx

from ..corpus.models import (Authorship, CitationEvent, Corpus, TimeWindow,
                             TopicLabel, WorkRecord, normalize_doi)
from ..corpus.io import parse_date
from ..corpus.windows import default_partition
from ..errors import BibliometryError, SchemaError, TransientFetchError
from .industry import IndustryKeywordList
from .listing import SkipRecord

DEFAULT_BASE_URL = "https://api.openalex.org"

EXPAND_REFERENCES = "references"
EXPAND_CITERS = "citers"
EXPAND_BOTH = "both"

_RETRY_STATUSES = {429, 500, 502, 503, 504}


class WorkNotFoundError(BibliometryError):
    """Provider does not know the requested work."""


@dataclass
class FetchPolicy:
    max_concurrent_requests: int = 4
    min_request_interval: float = 0.05   # seconds between request starts
    max_retries: int = 3
    backoff: float = 2.0
    contact_email: str = ""
    base_url: str = DEFAULT_BASE_URL
    per_page: int = 200
    citer_page_cap: int = 0              # 0 = fetch all pages
    timeout: float = 30.0

    def __post_init__(self):
        if self.min_request_interval <= 0:
            raise ValueError("min_request_interval must be > 0")
        if not 0 <= self.max_retries <= 10:
            raise ValueError("max_retries must be between 0 and 10")
        if self.max_concurrent_requests < 1:
            raise ValueError("max_concurrent_requests must be >= 1")


class WorkCache:
    """Insert-or-get payload cache, safe for concurrent use.

    Backed by one JSON file per key under `directory` when given
    (atomic writes via rename), with an in-memory layer either way.
    """

    def __init__(self, directory: Path | None = None):
        self.directory = Path(directory) if directory else None
        if self.directory:
            self.directory.mkdir(parents=True, exist_ok=True)
        self._memory: dict[str, dict] = {}
        self._lock = threading.Lock()

    def _path(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.directory / f"{digest}.json"

    def get(self, key: str) -> dict | None:
        with self._lock:
            if key in self._memory:
                return self._memory[key]
        if self.directory:
            path = self._path(key)
            if path.exists():
                payload = json.loads(path.read_text(encoding="utf-8"))
                with self._lock:
                    self._memory[key] = payload
                return payload
        return None

    def put(self, key: str, payload: dict) -> None:
        with self._lock:
            self._memory[key] = payload
        if self.directory:
            path = self._path(key)
            tmp = path.with_suffix(f".tmp-{os.getpid()}-{threading.get_ident()}")
            tmp.write_text(json.dumps(payload, sort_keys=True, ensure_ascii=False),
                           encoding="utf-8")
            os.replace(tmp, path)


class _RateLimiter:
    def __init__(self, interval: float):
        self.interval = interval
        self._lock = threading.Lock()
        self._next_start = 0.0

    def wait(self) -> None:
        with self._lock:
            now = time.monotonic()
            delay = self._next_start - now
            self._next_start = max(now, self._next_start) + self.interval
        if delay > 0:
            time.sleep(delay)


def short_id(raw: str) -> str:
    """'https://openalex.org/W123' -> 'W123'; already-short ids pass through."""
    return raw.rstrip("/").rsplit("/", 1)[-1] if raw else raw


@dataclass
class ExpansionResult:
    corpus: Corpus
    skips: list[SkipRecord] = field(default_factory=list)
    partial: bool = False


class WorksClient:
    """HTTP client for a works endpoint, with caching and rate limiting."""

    def __init__(self, policy: FetchPolicy, cache: WorkCache | None = None,
                 transport: httpx.BaseTransport | None = None):
        self.policy = policy
        self.cache = cache or WorkCache()
        self._limiter = _RateLimiter(policy.min_request_interval)
        headers = {"User-Agent": "bibliometry/0.1"}
        if policy.contact_email:
            headers["User-Agent"] += f" (mailto:{policy.contact_email})"
        self._http = httpx.Client(base_url=policy.base_url, headers=headers,
                                  timeout=policy.timeout, transport=transport)
        self.n_requests = 0

    def close(self) -> None:
        self._http.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    # -- raw HTTP ---------------------------------------------------------

    def _get_json(self, path: str, params: dict | None = None) -> dict:
        params = dict(params or {})
        if self.policy.contact_email:
            params.setdefault("mailto", self.policy.contact_email)
        last_error: Exception | None = None
        for attempt in range(self.policy.max_retries + 1):
            self._limiter.wait()
            self.n_requests += 1
            try:
                response = self._http.get(path, params=params)
            except httpx.HTTPError as exc:
                last_error = exc
                time.sleep(self.policy.min_request_interval
                           * self.policy.backoff ** attempt)
                continue
            if response.status_code == 404:
                raise WorkNotFoundError(f"not found: {path}")
            if response.status_code in _RETRY_STATUSES:
                last_error = TransientFetchError(
                    f"status {response.status_code} for {path}")
                time.sleep(self.policy.min_request_interval
                           * self.policy.backoff ** attempt)
                continue
            response.raise_for_status()
            try:
                return response.json()
            except ValueError as exc:
                raise SchemaError(f"non-JSON payload from {path}") from exc
        raise TransientFetchError(
            f"gave up on {path} after {self.policy.max_retries + 1} attempts: "
            f"{last_error}")

    # -- works ------------------------------------------------------------

    def fetch_raw_work(self, doi_or_id: str) -> dict:
        """Provider work object for a DOI or work id; cache hit skips HTTP."""
        key = _lookup_key(doi_or_id)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        payload = self._get_json(f"/works/{quote(key, safe=':/.')}")
        if not isinstance(payload, dict) or "id" not in payload:
            raise SchemaError("work payload has no 'id'", field_path="id")
        self.cache.put(key, payload)
        return payload

    def fetch_citers(self, work_id: str) -> list[dict]:
        """All works citing `work_id`, following cursor pagination.

        The page cap (policy.citer_page_cap, 0 = unlimited) is applied
        per cited work and recorded by the caller in provenance.
        """
        key = f"citers:{short_id(work_id)}"
        cached = self.cache.get(key)
        if cached is not None:
            return cached["results"]
        results: list[dict] = []
        cursor = "*"
        pages = 0
        while cursor:
            payload = self._get_json("/works", params={
                "filter": f"cites:{short_id(work_id)}",
                "per-page": self.policy.per_page,
                "cursor": cursor,
            })
            batch = payload.get("results")
            if not isinstance(batch, list):
                raise SchemaError("citers payload has no 'results' list",
                                  field_path="results")
            results.extend(batch)
            pages += 1
            cursor = (payload.get("meta") or {}).get("next_cursor")
            if self.policy.citer_page_cap and pages >= self.policy.citer_page_cap:
                break
        self.cache.put(key, {"results": results})
        return results


def _lookup_key(doi_or_id: str) -> str:
    if doi_or_id.startswith(("W", "w")) and doi_or_id[1:2].isdigit():
        return short_id(doi_or_id)
    if doi_or_id.startswith("https://openalex.org/"):
        return short_id(doi_or_id)
    doi = normalize_doi(doi_or_id)
    return f"doi:{doi}" if doi else short_id(doi_or_id)


def to_work_record(payload: dict, venue_key: str = "", role: str = "target",
                   keywords: IndustryKeywordList | None = None) -> WorkRecord:
    """Map a provider work object onto the corpus schema.

    Raises SchemaError naming the offending field path on malformed
    payloads. Industry flags are populated when a keyword list is given.
    """
    work_id = short_id(payload.get("id") or "")
    if not work_id:
        raise SchemaError("missing work id", field_path="id")

    raw_authorships = payload.get("authorships", [])
    if not isinstance(raw_authorships, list):
        raise SchemaError("authorships is not a list", field_path="authorships")
    authorships = []
    for i, raw in enumerate(raw_authorships):
        author = raw.get("author") or {}
        author_id = short_id(author.get("id") or "")
        if not author_id:
            raise SchemaError(f"authorship {i} has no author id",
                              field_path=f"authorships[{i}].author.id")
        affiliations = raw.get("raw_affiliation_strings") or []
        institutions = raw.get("institutions") or []
        affiliation_text = "; ".join(affiliations)
        organization = institutions[0].get("display_name") if institutions else None
        countries = raw.get("countries") or [
            inst.get("country_code") for inst in institutions
            if inst.get("country_code")
        ]
        country = (countries[0] or "unknown").upper() if countries else "unknown"
        classification_basis = affiliation_text or (organization or "")
        authorships.append(Authorship(
            author_id=author_id,
            raw_affiliation_text=affiliation_text,
            country_code=country if country != "UNKNOWN" else "unknown",
            is_industry=(keywords.matches(classification_basis)
                         if keywords and classification_basis else False),
            author_name=author.get("display_name"),
            organization=organization,
        ))

    topics = []
    primary = payload.get("primary_topic") or {}
    primary_name = ((primary.get("subfield") or {}).get("display_name")
                    or primary.get("display_name"))
    if primary_name:
        topics.append(TopicLabel(primary_name, is_primary=True))
    for raw_topic in payload.get("topics", []) or []:
        name = ((raw_topic.get("subfield") or {}).get("display_name")
                or raw_topic.get("display_name"))
        if name and all(t.discipline_name != name for t in topics):
            topics.append(TopicLabel(name, is_primary=False))

    return WorkRecord(
        work_id=work_id,
        doi=normalize_doi(payload.get("doi")),
        title=payload.get("display_name") or payload.get("title") or "",
        venue_key=venue_key,
        pub_date=parse_date(payload.get("publication_date")),
        authorships=authorships,
        topics=topics,
        referenced_ids=[short_id(r) for r in payload.get("referenced_works", []) or []],
        citation_count=int(payload.get("cited_by_count") or 0),
        role=role,
    )


def fetch_work_metadata(doi: str, policy: FetchPolicy, cache: WorkCache,
                        client: WorksClient | None = None, venue_key: str = "",
                        keywords: IndustryKeywordList | None = None) -> WorkRecord:
    """Fetch one work by DOI and map it; cache hits bypass the network."""
    own_client = client is None
    client = client or WorksClient(policy, cache)
    try:
        payload = client.fetch_raw_work(doi)
        return to_work_record(payload, venue_key=venue_key, keywords=keywords)
    finally:
        if own_client:
            client.close()


def expand_citation_neighborhood(seeds: list[WorkRecord], policy: FetchPolicy,
                                 depth: str = EXPAND_BOTH,
                                 cache: WorkCache | None = None,
                                 client: WorksClient | None = None,
                                 windows: list[TimeWindow] | None = None,
                                 keywords: IndustryKeywordList | None = None,
                                 provenance: str = "") -> ExpansionResult:
    """One-hop expansion: fetch referenced and/or citing works per seed.

    Seeds keep role "target"; neighbors get "reference", "citer" or
    "reference+citer". Unresolved neighbors go to the skip report and
    flip the partial flag instead of failing the pipeline.
    """
    if depth not in (EXPAND_REFERENCES, EXPAND_CITERS, EXPAND_BOTH):
        raise ValueError(f"unknown expansion depth {depth!r}")
    own_client = client is None
    client = client or WorksClient(policy, cache)
    skips: list[SkipRecord] = []
    partial = False
    works: dict[str, WorkRecord] = {}
    for seed in seeds:
        works[seed.work_id] = seed

    try:
        roles: dict[str, set[str]] = {}
        if depth in (EXPAND_REFERENCES, EXPAND_BOTH):
            for seed in seeds:
                for ref in seed.referenced_ids:
                    if ref not in works:
                        roles.setdefault(ref, set()).add("reference")

        ref_records: dict[str, WorkRecord] = {}
        if roles:
            with concurrent.futures.ThreadPoolExecutor(
                    max_workers=policy.max_concurrent_requests) as pool:
                futures = {pool.submit(client.fetch_raw_work, ref): ref
                           for ref in sorted(roles)}
                for future in concurrent.futures.as_completed(futures):
                    ref = futures[future]
                    try:
                        payload = future.result()
                        ref_records[ref] = to_work_record(
                            payload, role="reference", keywords=keywords)
                    except WorkNotFoundError:
                        skips.append(SkipRecord(ref, "expand", "not-found"))
                    except (TransientFetchError, SchemaError) as exc:
                        partial = True
                        skips.append(SkipRecord(ref, "expand",
                                                type(exc).__name__))

        if depth in (EXPAND_CITERS, EXPAND_BOTH):
            for seed in seeds:
                try:
                    citing_payloads = client.fetch_citers(seed.work_id)
                except (TransientFetchError, SchemaError) as exc:
                    partial = True
                    skips.append(SkipRecord(seed.work_id, "expand-citers",
                                            type(exc).__name__))
                    continue
                events = []
                for payload in citing_payloads:
                    try:
                        citer = to_work_record(payload, role="citer",
                                               keywords=keywords)
                    except SchemaError as exc:
                        partial = True
                        skips.append(SkipRecord(str(payload.get("id", "")),
                                                "expand-citers",
                                                type(exc).__name__))
                        continue
                    events.append(CitationEvent(citer.work_id, citer.pub_date))
                    if citer.work_id in ref_records:
                        ref_records[citer.work_id].role = "reference+citer"
                    elif citer.work_id not in works:
                        ref_records.setdefault(citer.work_id, citer)
                events.sort(key=lambda e: (e.citation_date or parse_date("9999-01-01"),
                                           e.work_id))
                seed.citer_events = events
                seed.citation_count = max(seed.citation_count, len(events))

        for work_id in sorted(ref_records):
            if work_id not in works:
                works[work_id] = ref_records[work_id]

        corpus = Corpus(works, windows if windows is not None else default_partition(),
                        provenance=provenance)
        skips.sort(key=lambda s: (s.stage, s.doi, s.reason))
        return ExpansionResult(corpus=corpus, skips=skips, partial=partial)
    finally:
        if own_client:
            client.close()
