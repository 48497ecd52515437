import datetime as dt

import pytest

from bibliometry.corpus import (Authorship, CitationEvent, Corpus, Subfield,
                                TopicLabel, WorkRecord, make_window_partition)


def make_work(work_id, subfield=Subfield.AI, year=2012, month=7, day=1,
              authors=(), countries=(), industry=(), citations=0,
              citer_events=(), referenced=(), primary_topic=None, doi=None,
              venue=None, role="target", organizations=()):
    """Compact WorkRecord builder for fixtures."""
    authorships = []
    for i, author in enumerate(authors):
        authorships.append(Authorship(
            author_id=author,
            raw_affiliation_text=(organizations[i] if i < len(organizations)
                                  else f"University of {author}"),
            country_code=countries[i] if i < len(countries) else "unknown",
            is_industry=bool(industry[i]) if i < len(industry) else False,
            author_name=author,
            organization=organizations[i] if i < len(organizations) else None,
        ))
    topics = [TopicLabel(primary_topic, True)] if primary_topic else []
    return WorkRecord(
        work_id=work_id,
        doi=doi if doi is not None else f"10.1000/{work_id.lower()}",
        title=f"Work {work_id}",
        venue_key=venue or sorted(subfield.venues)[0],
        subfield=subfield,
        pub_date=dt.date(year, month, day),
        authorships=authorships,
        topics=topics,
        referenced_ids=list(referenced),
        citer_events=[CitationEvent(w, d) for w, d in citer_events],
        citation_count=citations,
        role=role,
    )


@pytest.fixture
def default_windows():
    return make_window_partition(2000, 2024, 5)


@pytest.fixture
def tiny_corpus(default_windows):
    """Two AI works in 2010-2014 sharing one author, one CV work."""
    works = [
        make_work("W1", authors=("a", "b", "c"), countries=("CN", "US", "US"),
                  citations=10, year=2012),
        make_work("W2", authors=("a", "d"), countries=("CN", "CN"),
                  citations=3, year=2013),
        make_work("W3", subfield=Subfield.CV, authors=("e",), countries=("GB",),
                  citations=7, year=2021),
    ]
    return Corpus.from_works(works, default_windows, provenance="fixture")
