"""Top-k author selection by output within a subfield.

Ties break by total citations, then author id, so the selection is
deterministic and order-independent.
"""
from __future__ import annotations

from collections import defaultdict

from ..corpus.models import Corpus, Subfield, TimeWindow


def top_authors_by_output(corpus: Corpus, subfield: Subfield, k: int,
                          window: TimeWindow | None = None) -> list[str]:
    """Author ids of the k most productive authors in the subfield.

    Default scope is the full range; pass a window for per-window
    selection.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n_works: dict[str, int] = defaultdict(int)
    n_citations: dict[str, int] = defaultdict(int)
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        for auth in {a.author_id for a in work.authorships}:
            n_works[auth] += 1
            n_citations[auth] += work.citation_count
    ranked = sorted(n_works, key=lambda a: (-n_works[a], -n_citations[a], a))
    return ranked[:k]
