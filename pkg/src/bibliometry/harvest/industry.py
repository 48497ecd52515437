"""Industry-affiliation classification by keyword matching.

The shipped list reconstructs the usual markers (generic company terms
plus well-known company names); it is user-replaceable and its hash is
recorded in corpus provenance so runs remain auditable. Terms of at most
4 characters only match at token boundaries, which keeps "inc" from
firing inside "Incheon".
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

_BOUNDARY_MAX_LEN = 4


@dataclass
class IndustryKeywordList:
    keywords: list[str]

    def __post_init__(self):
        lowered = [k.strip().lower() for k in self.keywords if k.strip()]
        if not lowered:
            raise ValueError("keyword list must be nonempty")
        if len(set(lowered)) != len(lowered):
            dupes = sorted({k for k in lowered if lowered.count(k) > 1})
            raise ValueError(f"duplicate keywords: {dupes}")
        self.keywords = lowered
        self._substring = [k for k in lowered if len(k) > _BOUNDARY_MAX_LEN]
        self._bounded = [re.compile(r"\b" + re.escape(k) + r"\b")
                         for k in lowered if len(k) <= _BOUNDARY_MAX_LEN]

    @classmethod
    def from_file(cls, path: Path) -> "IndustryKeywordList":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls([l for l in lines if l.strip() and not l.lstrip().startswith("#")])

    @classmethod
    def default(cls) -> "IndustryKeywordList":
        text = resources.files("bibliometry.harvest").joinpath(
            "data/industry_keywords.txt").read_text(encoding="utf-8")
        return cls([l for l in text.splitlines()
                    if l.strip() and not l.lstrip().startswith("#")])

    @property
    def sha256(self) -> str:
        joined = "\n".join(self.keywords).encode("utf-8")
        return hashlib.sha256(joined).hexdigest()

    def matches(self, text: str) -> bool:
        lowered = text.lower()
        if any(k in lowered for k in self._substring):
            return True
        return any(p.search(lowered) for p in self._bounded)


def classify_industry(raw_affiliation: str, keywords: IndustryKeywordList) -> bool:
    """True iff any keyword matches the affiliation text."""
    if not raw_affiliation:
        return False
    return keywords.matches(raw_affiliation)
