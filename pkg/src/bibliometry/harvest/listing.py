"""Listing ingestion: per-venue-per-year documents to DOI sets.

Accepts listing documents as served - XML record exports or HTML index
pages - and emits one entry per publication link. Workshop, short-paper
and poster entries are flagged from the link/stream text; page spans are
parsed from the pagination field when present. Filtering keeps only
full-length main-track entries and reports every exclusion with a
machine-readable reason.
"""
from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from html.parser import HTMLParser

from ..corpus.models import normalize_doi
from ..errors import ListingParseError

FLAG_WORKSHOP = "workshop"
FLAG_SHORT = "short"
FLAG_POSTER = "poster"

# record types that are venue front matter, not papers
_NON_PAPER_TYPES = {"proceedings", "editorial", "editorship"}

_PAGE_SPAN = re.compile(r"^(\d+)\s*[-–]\s*(\d+)$")
_ARTICLE_SPAN = re.compile(r"^(\d+):(\d+)\s*[-–]\s*(\d+):(\d+)$")
_SINGLE_PAGE = re.compile(r"^(\d+)$")
_DOI_IN_URL = re.compile(r"doi\.org/(10\.\S+)", re.IGNORECASE)


@dataclass
class ListingEntry:
    url: str
    venue_key: str
    year: int
    doi: str = ""
    title: str = ""
    entry_type: str = "inproceedings"
    page_span: tuple[int, int] | None = None
    page_count: int | None = None
    flags: set[str] = field(default_factory=set)


@dataclass(frozen=True)
class SkipRecord:
    doi: str
    stage: str
    reason: str


def parse_pages(text: str | None) -> tuple[tuple[int, int] | None, int | None]:
    """(span, inclusive page count) from a pagination string, when derivable."""
    if not text:
        return None, None
    text = text.strip()
    match = _PAGE_SPAN.match(text)
    if match:
        first, last = int(match.group(1)), int(match.group(2))
        if last >= first:
            return (first, last), last - first + 1
        return None, None
    match = _ARTICLE_SPAN.match(text)
    if match and match.group(1) == match.group(3):
        first, last = int(match.group(2)), int(match.group(4))
        if last >= first:
            return None, last - first + 1
        return None, None
    if _SINGLE_PAGE.match(text):
        return None, 1
    return None, None


def _detect_flags(*texts: str) -> set[str]:
    joined = " ".join(t for t in texts if t).lower()
    flags = set()
    if "workshop" in joined:
        flags.add(FLAG_WORKSHOP)
    if "short paper" in joined or "short papers" in joined:
        flags.add(FLAG_SHORT)
    if "poster" in joined:
        flags.add(FLAG_POSTER)
    return flags


def _extract_doi(*urls: str) -> str:
    for url in urls:
        if not url:
            continue
        match = _DOI_IN_URL.search(url)
        if match:
            return normalize_doi(match.group(1))
        if url.lower().startswith("10."):
            return normalize_doi(url)
    return ""


def parse_dblp_listing(raw_listing: str, venue_key: str, year: int) -> list[ListingEntry]:
    """Parse one listing document into entries.

    Raises ListingParseError (with a byte offset where available) on a
    document that is neither parseable XML nor an HTML page with
    publication entries. Entries without any DOI are still emitted, with
    an empty DOI, so the caller can count them in the skip report.
    """
    stripped = raw_listing.lstrip()
    if not stripped:
        return []
    lowered = stripped[:200].lower()
    if lowered.startswith("<?xml") or lowered.startswith("<dblp"):
        return _parse_xml(raw_listing, venue_key, year)
    if "<html" in lowered or "<!doctype html" in lowered:
        return _parse_html(raw_listing, venue_key, year)
    # fall back to XML and let its error carry the offset
    return _parse_xml(raw_listing, venue_key, year)


def _parse_xml(raw: str, venue_key: str, year: int) -> list[ListingEntry]:
    try:
        root = ET.fromstring(raw)
    except ET.ParseError as exc:
        line, column = exc.position
        offset = sum(len(l) + 1 for l in raw.splitlines()[: line - 1]) + column
        raise ListingParseError(f"malformed listing XML: {exc}",
                                byte_offset=offset) from exc
    entries = []
    records = [el for el in root.iter()
               if el.tag in ("inproceedings", "proceedings", "article", "incollection")]
    for record in records:
        ee = [e.text or "" for e in record.findall("ee")]
        url = (record.findtext("url") or "").strip()
        key = record.get("key", "")
        title = (record.findtext("title") or "").strip()
        booktitle = (record.findtext("booktitle") or "").strip()
        span, count = parse_pages(record.findtext("pages"))
        entries.append(ListingEntry(
            url=ee[0] if ee else url,
            venue_key=venue_key,
            year=year,
            doi=_extract_doi(*ee, url),
            title=title,
            entry_type=record.tag,
            page_span=span,
            page_count=count,
            flags=_detect_flags(key, url, booktitle, title, *ee),
        ))
    return entries


class _EntryCollector(HTMLParser):
    """Collects li.entry blocks: hrefs, pagination spans and titles."""

    def __init__(self):
        super().__init__()
        self.blocks: list[dict] = []
        self._current: dict | None = None
        self._depth = 0
        self._capture: str | None = None

    def handle_starttag(self, tag, attrs):
        attrs = dict(attrs)
        classes = (attrs.get("class") or "").split()
        if tag == "li" and "entry" in classes:
            kind = next((c for c in classes if c not in ("entry", "toc")), "inproceedings")
            self._current = {"hrefs": [], "pages": "", "title": "",
                             "type": kind, "id": attrs.get("id", ""), "text": []}
            self._depth = 1
            return
        if self._current is None:
            return
        if tag == "li":
            self._depth += 1
        if tag == "a" and attrs.get("href"):
            self._current["hrefs"].append(attrs["href"])
        if attrs.get("itemprop") == "pagination":
            self._capture = "pages"
        elif attrs.get("class") == "title" or attrs.get("itemprop") == "name":
            self._capture = "title"

    def handle_data(self, data):
        if self._current is None:
            return
        if self._capture:
            self._current[self._capture] += data
        self._current["text"].append(data)

    def handle_endtag(self, tag):
        if tag in ("span", "cite", "a"):
            self._capture = None
        if self._current is not None and tag == "li":
            self._depth -= 1
            if self._depth == 0:
                self.blocks.append(self._current)
                self._current = None


def _parse_html(raw: str, venue_key: str, year: int) -> list[ListingEntry]:
    collector = _EntryCollector()
    try:
        collector.feed(raw)
        collector.close()
    except Exception as exc:  # html.parser raises only on truly broken input
        raise ListingParseError(f"malformed listing HTML: {exc}") from exc
    entries = []
    for block in collector.blocks:
        span, count = parse_pages(block["pages"].strip() or None)
        url = next((h for h in block["hrefs"] if "doi.org" in h),
                   block["hrefs"][0] if block["hrefs"] else "")
        entries.append(ListingEntry(
            url=url,
            venue_key=venue_key,
            year=year,
            doi=_extract_doi(*block["hrefs"]),
            title=block["title"].strip(),
            entry_type=block["type"],
            page_span=span,
            page_count=count,
            flags=_detect_flags(block["id"], block["title"],
                                " ".join(block["text"]), *block["hrefs"]),
        ))
    return entries


def filter_dois(entries: list[ListingEntry], min_pages: int = 7,
                ) -> tuple[list[str], list[SkipRecord]]:
    """Retained DOIs (deduplicated, order-stable) plus one skip record per
    exclusion.

    Drops flagged workshop/short/poster entries, venue front matter, and
    entries whose derivable page count is below min_pages; entries with
    no page information are retained.
    """
    if min_pages < 1:
        raise ValueError("min_pages must be >= 1")
    kept: list[str] = []
    seen: set[str] = set()
    skips: list[SkipRecord] = []

    def skip(entry: ListingEntry, reason: str) -> None:
        skips.append(SkipRecord(entry.doi, "filter", reason))

    for entry in entries:
        flagged = sorted(entry.flags & {FLAG_WORKSHOP, FLAG_SHORT, FLAG_POSTER})
        if flagged:
            skip(entry, f"{flagged[0]}-flag")
            continue
        if entry.entry_type in _NON_PAPER_TYPES:
            skip(entry, "non-paper-type")
            continue
        if not entry.doi:
            skip(entry, "no-doi")
            continue
        if entry.page_count is not None and entry.page_count < min_pages:
            skip(entry, f"pages-below-min:{entry.page_count}<{min_pages}")
            continue
        if entry.doi in seen:
            skip(entry, "duplicate-doi")
            continue
        seen.add(entry.doi)
        kept.append(entry.doi)
    return kept, skips
