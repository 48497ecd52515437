"""Industry collaboration rate and most frequent industry partners."""
from __future__ import annotations

import re
import string
from collections import defaultdict

from ..corpus.models import Corpus, Subfield, TimeWindow, WorkRecord
from ..errors import InsufficientDataError

_WS = re.compile(r"\s+")


def work_is_industry_collaborative(work: WorkRecord) -> bool:
    """A work counts as industry-collaborative iff at least one
    authorship carries the industry flag."""
    return any(a.is_industry for a in work.authorships)


def industry_rate(corpus: Corpus, window: TimeWindow | None,
                  subfield: Subfield | None) -> float:
    n_works = 0
    n_industry = 0
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        n_works += 1
        if work_is_industry_collaborative(work):
            n_industry += 1
    if n_works == 0:
        raise InsufficientDataError("no works in scope for industry rate")
    return n_industry / n_works


def normalize_org_name(text: str) -> str:
    """Lowercase, trim token-edge punctuation, collapse whitespace.

    Deterministic and auditable; no fuzzy merging.
    """
    tokens = []
    for token in _WS.split(text.strip().lower()):
        token = token.strip(string.punctuation)
        if token:
            tokens.append(token)
    return " ".join(tokens)


def top_industry_collaborators(corpus: Corpus, subfield: Subfield | None, k: int,
                               window: TimeWindow | None = None,
                               aliases: dict[str, str] | None = None,
                               ) -> list[tuple[str, int]]:
    """Organizations ranked by number of collaborating works, descending.

    Each work counts once per organization however many of its authors
    share it; ties break lexicographically. Returns at most k entries,
    never padded. The organization name is the provider-normalized one
    when present, else the raw affiliation text.
    """
    counts: dict[str, int] = defaultdict(int)
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        orgs = set()
        for auth in work.authorships:
            if not auth.is_industry:
                continue
            name = normalize_org_name(auth.organization or auth.raw_affiliation_text)
            if not name:
                continue
            if aliases:
                name = aliases.get(name, name)
            orgs.add(name)
        for org in orgs:
            counts[org] += 1
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:k]
