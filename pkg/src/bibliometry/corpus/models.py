"""Canonical data model: subfields, windows, works, authors, corpus.

A corpus is an id-indexed collection of work records plus a derived author
index and an attached window partition. It is built once and treated as
immutable afterwards; every metric module reads it concurrently without
coordination.
"""
from __future__ import annotations

import datetime as dt
import enum
from dataclasses import dataclass, field


class Subfield(str, enum.Enum):
    AI = "AI"
    CV = "CV"
    ML = "ML"
    NLP = "NLP"
    WEB_IR = "WebIR"

    @property
    def venues(self) -> frozenset[str]:
        return _SUBFIELD_VENUES[self]


# The 13 venue keys partition into the five subfields; no venue maps twice.
_SUBFIELD_VENUES: dict[Subfield, frozenset[str]] = {
    Subfield.AI: frozenset({"AAAI", "IJCAI"}),
    Subfield.CV: frozenset({"CVPR", "ECCV", "ICCV"}),
    Subfield.ML: frozenset({"ICLR", "ICML", "NeurIPS"}),
    Subfield.NLP: frozenset({"ACL", "EMNLP", "NAACL"}),
    Subfield.WEB_IR: frozenset({"SIGIR", "WWW"}),
}

VENUE_TO_SUBFIELD: dict[str, Subfield] = {
    venue: sub for sub, venues in _SUBFIELD_VENUES.items() for venue in venues
}

# Aliases seen in listing sources (DBLP stream keys, legacy names).
_VENUE_ALIASES = {
    "NIPS": "NeurIPS",
    "THEWEBCONF": "WWW",
}

UNKNOWN_COUNTRY = "unknown"


def canonical_venue(venue_key: str) -> str | None:
    """Map a raw venue key to one of the 13 canonical keys, or None."""
    key = venue_key.strip()
    upper = key.upper()
    for canon in VENUE_TO_SUBFIELD:
        if upper == canon.upper():
            return canon
    return _VENUE_ALIASES.get(upper)


def subfield_for_venue(venue_key: str) -> Subfield | None:
    """Subfield assignment is a pure function of the venue key."""
    canon = canonical_venue(venue_key)
    return VENUE_TO_SUBFIELD.get(canon) if canon else None


def normalize_doi(raw: str | None) -> str:
    """Lowercase and strip resolver prefixes ("https://doi.org/", "doi:")."""
    if not raw:
        return ""
    doi = raw.strip().lower()
    for prefix in ("https://doi.org/", "http://doi.org/", "https://dx.doi.org/",
                   "http://dx.doi.org/", "doi:"):
        if doi.startswith(prefix):
            doi = doi[len(prefix):]
    return doi.strip()


@dataclass(frozen=True, order=True)
class TimeWindow:
    """Inclusive [start_year, end_year] span."""

    start_year: int
    end_year: int

    def __post_init__(self):
        if self.end_year < self.start_year:
            raise ValueError(f"end_year {self.end_year} < start_year {self.start_year}")

    def contains_year(self, year: int) -> bool:
        return self.start_year <= year <= self.end_year

    @property
    def label(self) -> str:
        return f"{self.start_year}-{self.end_year}"

    def __str__(self) -> str:
        return self.label


@dataclass
class Authorship:
    author_id: str
    raw_affiliation_text: str = ""
    country_code: str = UNKNOWN_COUNTRY
    is_industry: bool = False
    author_name: str | None = None
    organization: str | None = None

    @property
    def has_known_country(self) -> bool:
        return bool(self.country_code) and self.country_code != UNKNOWN_COUNTRY


@dataclass
class TopicLabel:
    discipline_name: str
    is_primary: bool = False


@dataclass
class CitationEvent:
    work_id: str
    citation_date: dt.date | None


@dataclass
class WorkRecord:
    """One paper: identity, venue, dates, people, topics, citation links."""

    work_id: str
    doi: str = ""
    title: str = ""
    venue_key: str = ""
    subfield: Subfield | None = None
    pub_date: dt.date | None = None
    authorships: list[Authorship] = field(default_factory=list)
    topics: list[TopicLabel] = field(default_factory=list)
    referenced_ids: list[str] = field(default_factory=list)
    citer_events: list[CitationEvent] = field(default_factory=list)
    citation_count: int = 0
    role: str = "target"

    def __post_init__(self):
        self.doi = normalize_doi(self.doi)
        if self.subfield is None and self.venue_key:
            self.subfield = subfield_for_venue(self.venue_key)
        # citation_count must cover the retained citer events
        if self.citation_count < len(self.citer_events):
            self.citation_count = len(self.citer_events)
        if sum(1 for t in self.topics if t.is_primary) > 1:
            raise ValueError(f"work {self.work_id}: more than one primary topic")

    @property
    def is_target(self) -> bool:
        return "target" in self.role

    @property
    def n_authors(self) -> int:
        return len(self.authorships)

    def primary_discipline(self) -> str | None:
        for topic in self.topics:
            if topic.is_primary:
                return topic.discipline_name
        return None


@dataclass
class AuthorRecord:
    author_id: str
    display_name: str = ""
    work_ids: set[str] = field(default_factory=set)


class Corpus:
    """Immutable-after-load collection of works with a window partition."""

    def __init__(self, works: dict[str, WorkRecord], windows: list[TimeWindow],
                 provenance: str = "", authors: dict[str, AuthorRecord] | None = None):
        _check_windows(windows)
        _check_unique_dois(works.values())
        self.works = works
        self.windows = list(windows)
        self.provenance = provenance
        self.authors = authors if authors is not None else _index_authors(works)

    @classmethod
    def from_works(cls, works, windows, provenance: str = "") -> "Corpus":
        by_id: dict[str, WorkRecord] = {}
        for work in works:
            by_id[work.work_id] = work
        return cls(by_id, list(windows), provenance)

    def __len__(self) -> int:
        return len(self.works)

    def resolve(self, work_id: str) -> WorkRecord | None:
        return self.works.get(work_id)

    def window_of(self, work: WorkRecord) -> TimeWindow | None:
        from .windows import assign_window
        return assign_window(work, self.windows)

    def iter_target_works(self, subfield: Subfield | None = None,
                          window: TimeWindow | None = None):
        """Target works in scope; works without a parseable date never match
        a window scope."""
        for work_id in sorted(self.works):
            work = self.works[work_id]
            if not work.is_target or work.subfield is None:
                continue
            if subfield is not None and work.subfield is not subfield:
                continue
            if window is not None:
                if work.pub_date is None or not window.contains_year(work.pub_date.year):
                    continue
            yield work

    def works_of_author(self, author_id: str) -> list[WorkRecord]:
        record = self.authors.get(author_id)
        if record is None:
            return []
        return [self.works[w] for w in sorted(record.work_ids) if w in self.works]

    def observed_subfields(self) -> list[Subfield]:
        present = {w.subfield for w in self.works.values()
                   if w.is_target and w.subfield is not None}
        return [s for s in Subfield if s in present]


def _check_windows(windows: list[TimeWindow]) -> None:
    for earlier, later in zip(windows, windows[1:]):
        if later.start_year <= earlier.end_year:
            raise ValueError(f"windows overlap or are unordered: {earlier} / {later}")


def _check_unique_dois(works) -> None:
    seen: dict[str, str] = {}
    for work in works:
        if not work.doi:
            continue
        if work.doi in seen and seen[work.doi] != work.work_id:
            raise ValueError(f"duplicate DOI {work.doi!r} "
                             f"({seen[work.doi]} vs {work.work_id})")
        seen[work.doi] = work.work_id


def _index_authors(works: dict[str, WorkRecord]) -> dict[str, AuthorRecord]:
    authors: dict[str, AuthorRecord] = {}
    for work_id in sorted(works):
        for auth in works[work_id].authorships:
            record = authors.get(auth.author_id)
            if record is None:
                record = AuthorRecord(auth.author_id, auth.author_name or auth.author_id)
                authors[auth.author_id] = record
            if auth.author_name and record.display_name == record.author_id:
                record.display_name = auth.author_name
            record.work_ids.add(work_id)
    return authors
