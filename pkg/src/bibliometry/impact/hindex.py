"""H-index over a multiset of citation counts."""
from __future__ import annotations

from collections.abc import Iterable


def h_index(citation_counts: Iterable[int]) -> int:
    """Largest h such that at least h entries are >= h."""
    ranked = sorted(citation_counts, reverse=True)
    return sum(1 for rank, count in enumerate(ranked, 1) if count >= rank)
