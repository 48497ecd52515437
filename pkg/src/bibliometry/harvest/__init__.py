from .listing import (FLAG_POSTER, FLAG_SHORT, FLAG_WORKSHOP, ListingEntry,
                      SkipRecord, filter_dois, parse_dblp_listing, parse_pages)
from .industry import IndustryKeywordList, classify_industry
from .client import (DEFAULT_BASE_URL, EXPAND_BOTH, EXPAND_CITERS,
                     EXPAND_REFERENCES, ExpansionResult, FetchPolicy,
                     WorkCache, WorkNotFoundError, WorksClient,
                     expand_citation_neighborhood, fetch_work_metadata,
                     short_id, to_work_record)

__all__ = [
    "FLAG_POSTER", "FLAG_SHORT", "FLAG_WORKSHOP", "ListingEntry",
    "SkipRecord", "filter_dois", "parse_dblp_listing", "parse_pages",
    "IndustryKeywordList", "classify_industry", "DEFAULT_BASE_URL",
    "EXPAND_BOTH", "EXPAND_CITERS", "EXPAND_REFERENCES", "ExpansionResult",
    "FetchPolicy", "WorkCache", "WorkNotFoundError", "WorksClient",
    "expand_citation_neighborhood", "fetch_work_metadata", "short_id",
    "to_work_record",
]
