"""Topic mobility: JS divergence between adjacent-window distributions,
and cross-discipline migration flows of dominant topics."""
from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass

from ..corpus.models import Corpus, Subfield, TimeWindow
from ..errors import InsufficientDataError
from ..collab.selection import top_authors_by_output
from .topics import js_divergence, topic_distribution


def author_mobility(corpus: Corpus, author_id: str, windows: list[TimeWindow],
                    base: float = 2.0) -> float | None:
    """Mean JS divergence over consecutive window pairs where the author
    published in both; None when no pair qualifies."""
    distributions = [topic_distribution(corpus, author_id, w) for w in windows]
    divergences = []
    for current, following in zip(distributions, distributions[1:]):
        if current.support_count > 0 and following.support_count > 0:
            divergences.append(js_divergence(current.proportions,
                                             following.proportions, base=base))
    if not divergences:
        return None
    return sum(divergences) / len(divergences)


def field_mobility(corpus: Corpus, subfield: Subfield, top_k: int = 3000,
                   windows: list[TimeWindow] | None = None,
                   base: float = 2.0) -> float:
    """Mean of defined author mobilities over the subfield's top_k authors."""
    windows = windows if windows is not None else corpus.windows
    values = []
    for author_id in top_authors_by_output(corpus, subfield, top_k):
        mobility = author_mobility(corpus, author_id, windows, base=base)
        if mobility is not None:
            values.append(mobility)
    if not values:
        raise InsufficientDataError(
            f"no author in {subfield.value} has mobility defined")
    return sum(values) / len(values)


@dataclass(frozen=True)
class MigrationFlow:
    from_discipline: str
    to_discipline: str
    count: int
    net: int    # count(from -> to) - count(to -> from)


def dominant_discipline(proportions: dict[str, float]) -> str | None:
    """Argmax discipline; ties yield None (no transition is recorded)."""
    if not proportions:
        return None
    best = max(proportions.values())
    winners = [d for d, p in proportions.items() if p == best]
    return winners[0] if len(winners) == 1 else None


def migration_flows(corpus: Corpus, windows: list[TimeWindow], top_n: int,
                    authors: Iterable[str] | None = None) -> list[MigrationFlow]:
    """Directed dominant-topic transitions between adjacent windows.

    Defaults to all corpus authors; pass an author subset to restrict.
    Returns the top_n directions by count (ties break lexicographically),
    each with its net value against the reverse direction.
    """
    author_ids = sorted(authors) if authors is not None else sorted(corpus.authors)
    counts: dict[tuple[str, str], int] = defaultdict(int)
    for author_id in author_ids:
        dominants = []
        for window in windows:
            dist = topic_distribution(corpus, author_id, window)
            dominants.append(dominant_discipline(dist.proportions))
        for previous, current in zip(dominants, dominants[1:]):
            if previous is not None and current is not None and previous != current:
                counts[(previous, current)] += 1
    ranked = sorted(counts, key=lambda pair: (-counts[pair], pair))
    return [
        MigrationFlow(src, dst, counts[(src, dst)],
                      counts[(src, dst)] - counts.get((dst, src), 0))
        for src, dst in ranked[:top_n]
    ]
