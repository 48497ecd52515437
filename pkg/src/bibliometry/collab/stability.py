"""Collaboration stability: Jaccard overlap of collaborator sets across
adjacent windows, averaged over authors active in both."""
from __future__ import annotations

from collections.abc import Iterable

from ..corpus.models import Corpus, Subfield, TimeWindow
from ..errors import InsufficientDataError
from .selection import top_authors_by_output


def collaborator_sets(corpus: Corpus, author_id: str,
                      window: TimeWindow | None) -> set[str]:
    """Union of co-authors over the author's in-window works, self excluded."""
    collaborators: set[str] = set()
    for work in corpus.works_of_author(author_id):
        if not work.is_target:
            continue
        if window is not None:
            if work.pub_date is None or not window.contains_year(work.pub_date.year):
                continue
        collaborators.update(a.author_id for a in work.authorships)
    collaborators.discard(author_id)
    return collaborators


def _active_in(corpus: Corpus, author_id: str, window: TimeWindow) -> bool:
    for work in corpus.works_of_author(author_id):
        if (work.is_target and work.pub_date is not None
                and window.contains_year(work.pub_date.year)):
            return True
    return False


def jaccard_stability(corpus: Corpus, windows: tuple[TimeWindow, TimeWindow],
                      authors: Iterable[str]) -> float:
    """Mean Jaccard similarity over authors involved in both windows.

    Authors inactive in either window, or with an empty union of
    collaborator sets, are excluded from the mean rather than scored 0.
    """
    first, second = windows
    similarities = []
    for author_id in authors:
        if not (_active_in(corpus, author_id, first)
                and _active_in(corpus, author_id, second)):
            continue
        before = collaborator_sets(corpus, author_id, first)
        after = collaborator_sets(corpus, author_id, second)
        union = before | after
        if not union:
            continue
        similarities.append(len(before & after) / len(union))
    if not similarities:
        raise InsufficientDataError(
            f"no author is active in both {first} and {second}")
    return sum(similarities) / len(similarities)


def subfield_stability(corpus: Corpus, subfield: Subfield,
                       windows: tuple[TimeWindow, TimeWindow],
                       top_k: int = 3000) -> float:
    """Stability over the subfield's top_k authors by output."""
    scope = top_authors_by_output(corpus, subfield, top_k)
    return jaccard_stability(corpus, windows, scope)
