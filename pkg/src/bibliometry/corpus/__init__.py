from .models import (Authorship, AuthorRecord, CitationEvent, Corpus, Subfield,
                     TimeWindow, TopicLabel, WorkRecord, UNKNOWN_COUNTRY,
                     VENUE_TO_SUBFIELD, canonical_venue, normalize_doi,
                     subfield_for_venue)
from .windows import (assign_window, default_partition, make_window_partition,
                      window_for_year)
from .stats import YearlyCount, yearly_counts
from . import io

__all__ = [
    "Authorship", "AuthorRecord", "CitationEvent", "Corpus", "Subfield",
    "TimeWindow", "TopicLabel", "WorkRecord", "UNKNOWN_COUNTRY",
    "VENUE_TO_SUBFIELD", "canonical_venue", "normalize_doi",
    "subfield_for_venue", "assign_window", "default_partition",
    "make_window_partition", "window_for_year", "YearlyCount",
    "yearly_counts", "io",
]
