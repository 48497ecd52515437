"""Per-author productivity via the classic H-index."""
from __future__ import annotations

from ..corpus.models import Corpus
from ..errors import AuthorNotFoundError
from ..impact.hindex import h_index


def author_h_index(corpus: Corpus, author_id: str) -> int:
    """H-index over citation counts of the author's works in the corpus."""
    if author_id not in corpus.authors:
        raise AuthorNotFoundError(f"unknown author {author_id!r}")
    counts = [w.citation_count for w in corpus.works_of_author(author_id)]
    return h_index(counts)
