"""Collaboration index: average team size in a scope."""
from __future__ import annotations

from collections import Counter

from ..corpus.models import Corpus, Subfield, TimeWindow
from ..errors import InsufficientDataError


def collaboration_index(corpus: Corpus, window: TimeWindow | None,
                        subfield: Subfield | None) -> float:
    """Sum over team sizes j of j * f_j, divided by the number of works.

    f_j is the number of works with exactly j authors; the result equals
    the plain mean of per-work author counts.
    """
    frequency: Counter = Counter()
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        frequency[work.n_authors] += 1
    n_works = sum(frequency.values())
    if n_works == 0:
        raise InsufficientDataError("no works in scope for collaboration index")
    return sum(j * f for j, f in frequency.items()) / n_works


def author_count_sample(corpus: Corpus, window: TimeWindow | None,
                        subfield: Subfield | None) -> list[int]:
    """Per-work author counts, for distribution exports."""
    return [w.n_authors
            for w in corpus.iter_target_works(subfield=subfield, window=window)]
