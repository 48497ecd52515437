"""Corpus persistence: JSON-lines works file plus a sidecar manifest.

One WorkRecord object per line, UTF-8, field names exactly as in the data
model; readers tolerate unknown extra fields. The manifest records the
window partition and provenance so a corpus file round-trips on its own.
"""
from __future__ import annotations

import datetime as dt
import json
from pathlib import Path

from .models import (Authorship, CitationEvent, Corpus, Subfield, TimeWindow,
                     TopicLabel, WorkRecord)

SCHEMA_VERSION = 1


def manifest_path_for(corpus_path: Path) -> Path:
    return corpus_path.with_name(corpus_path.stem + ".manifest.json")


def _date_str(value: dt.date | None) -> str | None:
    return value.isoformat() if value is not None else None


def parse_date(value) -> dt.date | None:
    """Lenient ISO date parse; anything unparseable becomes None."""
    if not value or not isinstance(value, str):
        return None
    try:
        return dt.date.fromisoformat(value[:10])
    except ValueError:
        return None


def work_to_dict(work: WorkRecord) -> dict:
    return {
        "work_id": work.work_id,
        "doi": work.doi,
        "title": work.title,
        "venue_key": work.venue_key,
        "subfield": work.subfield.value if work.subfield else None,
        "pub_date": _date_str(work.pub_date),
        "authorships": [
            {
                "author_id": a.author_id,
                "raw_affiliation_text": a.raw_affiliation_text,
                "country_code": a.country_code,
                "is_industry": a.is_industry,
                "author_name": a.author_name,
                "organization": a.organization,
            }
            for a in work.authorships
        ],
        "topics": [
            {"discipline_name": t.discipline_name, "is_primary": t.is_primary}
            for t in work.topics
        ],
        "referenced_ids": list(work.referenced_ids),
        "citer_events": [
            {"work_id": e.work_id, "citation_date": _date_str(e.citation_date)}
            for e in work.citer_events
        ],
        "citation_count": work.citation_count,
        "role": work.role,
    }


def work_from_dict(data: dict) -> WorkRecord:
    subfield = data.get("subfield")
    return WorkRecord(
        work_id=str(data["work_id"]),
        doi=data.get("doi") or "",
        title=data.get("title") or "",
        venue_key=data.get("venue_key") or "",
        subfield=Subfield(subfield) if subfield else None,
        pub_date=parse_date(data.get("pub_date")),
        authorships=[
            Authorship(
                author_id=str(a["author_id"]),
                raw_affiliation_text=a.get("raw_affiliation_text") or "",
                country_code=a.get("country_code") or "unknown",
                is_industry=bool(a.get("is_industry", False)),
                author_name=a.get("author_name"),
                organization=a.get("organization"),
            )
            for a in data.get("authorships", [])
        ],
        topics=[
            TopicLabel(t["discipline_name"], bool(t.get("is_primary", False)))
            for t in data.get("topics", [])
        ],
        referenced_ids=[str(r) for r in data.get("referenced_ids", [])],
        citer_events=[
            CitationEvent(str(e["work_id"]), parse_date(e.get("citation_date")))
            for e in data.get("citer_events", [])
        ],
        citation_count=int(data.get("citation_count", 0)),
        role=data.get("role") or "target",
    )


def write_corpus(corpus: Corpus, path: Path, manifest_path: Path | None = None) -> Path:
    """Write works sorted by id (byte-identical across reruns) plus manifest."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for work_id in sorted(corpus.works):
            fh.write(json.dumps(work_to_dict(corpus.works[work_id]),
                                sort_keys=True, ensure_ascii=False))
            fh.write("\n")
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "windows": [{"start_year": w.start_year, "end_year": w.end_year}
                    for w in corpus.windows],
        "provenance": corpus.provenance,
        "n_works": len(corpus),
    }
    mpath = Path(manifest_path) if manifest_path else manifest_path_for(path)
    mpath.write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n",
                     encoding="utf-8")
    return mpath


def read_corpus(path: Path, windows: list[TimeWindow] | None = None,
                provenance: str | None = None) -> Corpus:
    """Load a JSONL corpus; windows come from the manifest unless given."""
    path = Path(path)
    works = {}
    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{line_no}: invalid JSON: {exc}") from exc
            work = work_from_dict(data)
            works[work.work_id] = work
    if windows is None or provenance is None:
        mpath = manifest_path_for(path)
        if mpath.exists():
            manifest = json.loads(mpath.read_text(encoding="utf-8"))
            if windows is None:
                windows = [TimeWindow(w["start_year"], w["end_year"])
                           for w in manifest.get("windows", [])]
            if provenance is None:
                provenance = manifest.get("provenance", "")
    return Corpus(works, windows or [], provenance or "")
