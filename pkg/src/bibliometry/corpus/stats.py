"""Corpus-level descriptive statistics (annual volume / authors / citations)."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .models import Corpus


@dataclass(frozen=True)
class YearlyCount:
    year: int
    subfield: str
    n_papers: int
    n_distinct_authors: int
    n_citations_received: int


def yearly_counts(corpus: Corpus) -> list[YearlyCount]:
    """One row per (year, subfield) actually present; empty cells are absent.

    n_citations_received counts citer events whose cited work was published
    in that year, regardless of when the citing work appeared.
    """
    if len(corpus) == 0:
        raise ValueError("corpus is empty")
    papers: dict[tuple[int, str], int] = defaultdict(int)
    authors: dict[tuple[int, str], set[str]] = defaultdict(set)
    citations: dict[tuple[int, str], int] = defaultdict(int)
    for work in corpus.iter_target_works():
        if work.pub_date is None:
            continue
        key = (work.pub_date.year, work.subfield.value)
        papers[key] += 1
        authors[key].update(a.author_id for a in work.authorships)
        citations[key] += len(work.citer_events)
    return [
        YearlyCount(year, sub, papers[(year, sub)],
                    len(authors[(year, sub)]), citations[(year, sub)])
        for year, sub in sorted(papers)
    ]
