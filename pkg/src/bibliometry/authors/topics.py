"""Per-author topic distributions and Jensen-Shannon divergence.

A distribution counts the author's in-window works by primary discipline
and normalizes. JS divergence uses log base 2 by default so the value is
bounded in [0, 1]; the base is configurable and recorded in output
metadata by the pipeline.
"""
from __future__ import annotations

import math
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field

from ..corpus.models import Corpus, TimeWindow
from ..errors import InvalidDistributionError

_SUM_TOLERANCE = 1e-6


@dataclass
class TopicDistribution:
    author_id: str
    window: TimeWindow | None
    proportions: dict[str, float] = field(default_factory=dict)
    support_count: int = 0


def topic_distribution(corpus: Corpus, author_id: str,
                       window: TimeWindow | None) -> TopicDistribution:
    """Normalized counts of the author's in-window works per primary
    discipline; works without a primary topic contribute nothing."""
    counts: Counter = Counter()
    for work in corpus.works_of_author(author_id):
        if window is not None:
            if work.pub_date is None or not window.contains_year(work.pub_date.year):
                continue
        discipline = work.primary_discipline()
        if discipline:
            counts[discipline] += 1
    total = sum(counts.values())
    proportions = {d: n / total for d, n in sorted(counts.items())} if total else {}
    return TopicDistribution(author_id, window, proportions, total)


def _validate(dist: Mapping[str, float], name: str) -> None:
    total = 0.0
    for value in dist.values():
        if value < 0:
            raise InvalidDistributionError(f"{name}: negative proportion")
        total += value
    if abs(total - 1.0) > _SUM_TOLERANCE:
        raise InvalidDistributionError(f"{name}: sums to {total}, not 1")


def js_divergence(p: Mapping[str, float], q: Mapping[str, float],
                  base: float = 2.0) -> float:
    """JS(p, q) = (KL(p, m) + KL(q, m)) / 2 with m the midpoint.

    Supports are unioned and missing keys treated as 0. Under base 2 the
    result lies in [0, 1], hitting 1 exactly on disjoint supports.
    """
    _validate(p, "p")
    _validate(q, "q")
    log_base = math.log(base)
    divergence = 0.0
    # sorted union: summation order must not depend on string hash order
    for key in sorted(set(p) | set(q)):
        pv = p.get(key, 0.0)
        qv = q.get(key, 0.0)
        m = (pv + qv) / 2.0
        if pv > 0:
            divergence += 0.5 * pv * (math.log(pv / m) / log_base)
        if qv > 0:
            divergence += 0.5 * qv * (math.log(qv / m) / log_base)
    return divergence
