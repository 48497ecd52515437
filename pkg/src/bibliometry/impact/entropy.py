"""Shannon entropy of discipline proportions (interdisciplinarity).

Natural log throughout; a work's entropy is computed over the primary
disciplines of its resolvable references (direction "cited") or citing
works (direction "citing").
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

import numpy as np

from ..corpus.models import Corpus, WorkRecord
from ..errors import InvalidDistributionError

DIRECTION_CITED = "cited"
DIRECTION_CITING = "citing"

_SUM_TOLERANCE = 1e-6


def shannon_entropy(proportions: Iterable[float]) -> float:
    """H = -sum(p * ln p) with 0*ln(0) = 0; input must sum to 1."""
    p = np.asarray(list(proportions), dtype=float)
    if p.size == 0:
        raise InvalidDistributionError("empty proportion vector")
    if np.any(p < 0):
        raise InvalidDistributionError("negative proportion")
    total = float(p.sum())
    if abs(total - 1.0) > _SUM_TOLERANCE:
        raise InvalidDistributionError(f"proportions sum to {total}, not 1")
    nonzero = p[p > 0]
    return float(-np.sum(nonzero * np.log(nonzero)))


def neighbor_discipline_counts(work: WorkRecord, corpus: Corpus,
                               direction: str) -> Counter:
    """Primary-discipline counts over the work's references or citers.

    Neighbors that do not resolve in the corpus or lack a primary topic
    contribute nothing.
    """
    if direction == DIRECTION_CITED:
        neighbor_ids = work.referenced_ids
    elif direction == DIRECTION_CITING:
        neighbor_ids = [e.work_id for e in work.citer_events]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    counts: Counter = Counter()
    for neighbor_id in neighbor_ids:
        neighbor = corpus.resolve(neighbor_id)
        if neighbor is None:
            continue
        discipline = neighbor.primary_discipline()
        if discipline:
            counts[discipline] += 1
    return counts


def work_interdisciplinarity(work: WorkRecord, corpus: Corpus,
                             direction: str) -> float | None:
    """Entropy of the work's neighbor-discipline proportions, or None
    when no neighbor resolves with a topic."""
    counts = neighbor_discipline_counts(work, corpus, direction)
    total = sum(counts.values())
    if total == 0:
        return None
    return shannon_entropy(n / total for n in counts.values())
