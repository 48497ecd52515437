"""Citation velocity: time to accumulate a threshold number of citations.

Preprint citations may predate formal publication, so zero or negative
day gaps are clamped to 1 day; velocities are annualized with 365.25
days per year (threshold * 365.25 / days).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..corpus.models import Corpus, Subfield, TimeWindow, WorkRecord

DAYS_PER_YEAR = 365.25

COHORT_ALL = "all_reaching_n"
COHORT_TOP20 = "top20pct_by_citations"


@dataclass(frozen=True)
class VelocityRecord:
    work_id: str
    threshold: int
    days_to_threshold: int

    @property
    def velocity(self) -> float:
        return self.threshold * DAYS_PER_YEAR / self.days_to_threshold


def annualized_velocity(threshold: int, days: int) -> float:
    return threshold * DAYS_PER_YEAR / days


def days_to_n_citations(work: WorkRecord, n: int) -> int | None:
    """Days from publication to the n-th citation event, clamped to >= 1.

    None when the work has fewer than n dated citation events or no
    parseable publication date.
    """
    if n < 1:
        raise ValueError("citation threshold must be >= 1")
    if work.pub_date is None:
        return None
    dated = sorted((e.citation_date, e.work_id) for e in work.citer_events
                   if e.citation_date is not None)
    if len(dated) < n:
        return None
    nth_date = dated[n - 1][0]
    return max(1, (nth_date - work.pub_date).days)


def velocity_distribution(corpus: Corpus, window: TimeWindow, subfield: Subfield,
                          n: int, cohort: str = COHORT_ALL) -> list[int]:
    """Raw day-count sample for one (subfield, window) cell.

    COHORT_ALL keeps every work reaching n citations. COHORT_TOP20 first
    restricts to works at or above the 80th percentile of citation_count
    (ties at the cutoff included), then measures days to n.
    """
    works = list(corpus.iter_target_works(subfield=subfield, window=window))
    if cohort == COHORT_TOP20:
        works = top_cited_fraction(works, 0.2)
    elif cohort != COHORT_ALL:
        raise ValueError(f"unknown cohort {cohort!r}")
    days = [days_to_n_citations(w, n) for w in works]
    return [d for d in days if d is not None]


def top_cited_fraction(works: list[WorkRecord], fraction: float) -> list[WorkRecord]:
    """Works with citation_count >= the k-th largest, k = ceil(fraction * N)."""
    if not works:
        return []
    k = max(1, math.ceil(fraction * len(works)))
    cutoff = sorted((w.citation_count for w in works), reverse=True)[k - 1]
    return [w for w in works if w.citation_count >= cutoff]
