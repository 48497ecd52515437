"""Synthetic corpora with known ground truth.

Generation is fully deterministic under the spec seed. Citation counts
follow a rank power law per (subfield, window) cell so the estimator can
be calibrated against the configured exponent; citation-event dates are
laid out to hit configurable days-to-threshold targets; co-authorship
follows a clique-plus-bridges block structure.
"""
from __future__ import annotations

import datetime as dt
import random
from dataclasses import dataclass, field

from ..corpus.models import (Authorship, CitationEvent, Corpus, Subfield,
                             TopicLabel, WorkRecord)
from ..corpus.windows import make_window_partition

DEFAULT_TOPICS = [
    "Artificial Intelligence",
    "Computer Vision and Pattern Recognition",
    "Information Systems",
    "Computer Networks and Communications",
    "Statistics and Probability",
    "Signal Processing",
    "Language and Linguistics",
]

DEFAULT_COUNTRIES = {"CN": 0.35, "US": 0.3, "GB": 0.1, "DE": 0.1, "SG": 0.05,
                     "CA": 0.05, "unknown": 0.05}

_COMPANIES = ["Google Research", "Microsoft Research Asia", "Alibaba Group",
              "Tencent AI Lab", "IBM Research", "Huawei Noah's Ark Lab",
              "Adobe Research", "Meta AI"]


@dataclass
class SynthSpec:
    seed: int = 0
    n_works: int = 20                 # per subfield per window
    subfields: list[Subfield] = field(default_factory=lambda: list(Subfield))
    start_year: int = 2000
    end_year: int = 2024
    window_width: int = 5
    citation_exponent: float = 1.2    # rank power-law exponent per cell
    citation_scale: float = 200.0     # citations of the rank-1 work
    citation_noise: float = 0.1       # multiplicative jitter, uniform +-
    countries: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_COUNTRIES))
    industry_probability: float = 0.15
    authors_per_subfield: int = 60
    clique_size: int = 6
    inter_clique_edge_probability: float = 0.2
    max_team_size: int = 5
    topics: list[str] = field(default_factory=lambda: list(DEFAULT_TOPICS))
    topic_concentration: float = 0.75  # weight of an author's home topic
    refs_per_work: int = 6
    intra_subfield_reference_bias: float = 0.6
    days_to_threshold_range: tuple[int, int] = (30, 900)
    velocity_threshold: int = 25
    max_dated_events: int = 40

    def validate(self) -> None:
        if self.clique_size > self.authors_per_subfield:
            raise ValueError("clique size exceeds the author pool per subfield")
        if self.clique_size < 1 or self.n_works < 1 or self.window_width < 1:
            raise ValueError("sizes must be positive")
        if not 0 <= self.industry_probability <= 1:
            raise ValueError("industry_probability must be in [0, 1]")
        if not 0 <= self.inter_clique_edge_probability <= 1:
            raise ValueError("inter_clique_edge_probability must be in [0, 1]")
        if self.citation_exponent <= 0:
            raise ValueError("citation exponent must be positive")
        lo, hi = self.days_to_threshold_range
        if lo < 1 or hi < lo:
            raise ValueError("days_to_threshold_range must satisfy 1 <= lo <= hi")


@dataclass
class _Author:
    author_id: str
    name: str
    country: str
    home_topic: str
    clique: int


def _rank_counts(rng: random.Random, spec: SynthSpec, n: int) -> list[int]:
    """Counts following scale * rank**(-exponent) with jitter, shuffled."""
    counts = []
    for rank in range(1, n + 1):
        noise = 1.0 + rng.uniform(-spec.citation_noise, spec.citation_noise)
        counts.append(max(0, round(spec.citation_scale * rank ** (-spec.citation_exponent) * noise)))
    rng.shuffle(counts)
    return counts


def _pick_topic(rng: random.Random, spec: SynthSpec, author: _Author) -> str:
    if rng.random() < spec.topic_concentration:
        return author.home_topic
    return rng.choice(spec.topics)


def generate_corpus(spec: SynthSpec) -> Corpus:
    spec.validate()
    rng = random.Random(spec.seed)
    windows = make_window_partition(spec.start_year, spec.end_year, spec.window_width)

    country_names = sorted(spec.countries)
    country_weights = [spec.countries[c] for c in country_names]

    authors_by_subfield: dict[Subfield, list[_Author]] = {}
    for subfield in spec.subfields:
        pool = []
        for i in range(spec.authors_per_subfield):
            author_id = f"A-{subfield.value}-{i:04d}"
            pool.append(_Author(
                author_id=author_id,
                name=f"Author {subfield.value} {i}",
                country=rng.choices(country_names, weights=country_weights)[0],
                home_topic=rng.choice(spec.topics),
                clique=i // spec.clique_size,
            ))
        authors_by_subfield[subfield] = pool

    works: list[WorkRecord] = []
    ids_by_subfield: dict[Subfield, list[str]] = {s: [] for s in spec.subfields}
    serial = 0
    for window in windows:
        for subfield in spec.subfields:
            counts = _rank_counts(rng, spec, spec.n_works)
            for i in range(spec.n_works):
                serial += 1
                work_id = f"W{serial:06d}"
                year = rng.randint(window.start_year, window.end_year)
                pub_date = dt.date(year, rng.randint(1, 12), rng.randint(1, 28))

                pool = authors_by_subfield[subfield]
                cliques = spec.authors_per_subfield // spec.clique_size
                clique = rng.randrange(max(1, cliques))
                members = [a for a in pool if a.clique == clique]
                size = rng.randint(1, min(spec.max_team_size, len(members)))
                team = rng.sample(members, size)
                if cliques > 1 and rng.random() < spec.inter_clique_edge_probability:
                    outsiders = [a for a in pool if a.clique != clique]
                    team.append(rng.choice(outsiders))

                authorships = []
                for author in team:
                    industry = rng.random() < spec.industry_probability
                    org = rng.choice(_COMPANIES) if industry else f"University {author.clique}"
                    authorships.append(Authorship(
                        author_id=author.author_id,
                        raw_affiliation_text=org,
                        country_code=author.country,
                        is_industry=industry,
                        author_name=author.name,
                        organization=org,
                    ))

                primary = _pick_topic(rng, spec, team[0])
                topics = [TopicLabel(primary, is_primary=True)]
                extra = rng.choice(spec.topics)
                if extra != primary:
                    topics.append(TopicLabel(extra, is_primary=False))

                works.append(WorkRecord(
                    work_id=work_id,
                    doi=f"10.9999/{work_id.lower()}",
                    title=f"Synthetic work {serial}",
                    venue_key=sorted(subfield.venues)[serial % len(subfield.venues)],
                    subfield=subfield,
                    pub_date=pub_date,
                    authorships=authorships,
                    citation_count=counts[i],
                ))
                ids_by_subfield[subfield].append(work_id)
                works[-1].topics = topics

    all_ids = [w.work_id for w in works]
    by_id = {w.work_id: w for w in works}

    # references: biased toward the same subfield, drawn over the whole range
    for work in works:
        same = ids_by_subfield[work.subfield]
        refs: list[str] = []
        for _ in range(spec.refs_per_work):
            pool = same if rng.random() < spec.intra_subfield_reference_bias else all_ids
            ref = rng.choice(pool)
            if ref != work.work_id and ref not in refs:
                refs.append(ref)
        work.referenced_ids = refs

    # dated citation events; the velocity threshold lands on a drawn target day
    lo, hi = spec.days_to_threshold_range
    for work in works:
        n_events = min(work.citation_count, spec.max_dated_events)
        if n_events == 0:
            continue
        threshold = spec.velocity_threshold
        target = rng.randint(lo, hi)
        dates = []
        if n_events >= threshold:
            for i in range(1, threshold + 1):
                dates.append(max(1, round(target * i / threshold)))
            for i in range(threshold + 1, n_events + 1):
                dates.append(target + (i - threshold) * rng.randint(5, 40))
        else:
            step = max(1, (target * 2) // max(1, n_events))
            dates = [1 + i * step for i in range(n_events)]
        events = []
        for offset in dates:
            citing = rng.choice(all_ids)
            events.append(CitationEvent(citing, work.pub_date + dt.timedelta(days=offset)))
        work.citer_events = events
        work.citation_count = max(work.citation_count, len(events))

    return Corpus(by_id, windows, provenance=f"synthetic seed={spec.seed}")


def uniform_citation_corpus(n_works: int, n_citations: int, seed: int) -> Corpus:
    """Works split evenly across the five subfields, with citation
    endpoints drawn uniformly at random - the null model's own regime."""
    rng = random.Random(seed)
    subfields = list(Subfield)
    windows = make_window_partition(2020, 2024, 5)
    works = []
    for i in range(n_works):
        works.append(WorkRecord(
            work_id=f"U{i:06d}",
            subfield=subfields[i % len(subfields)],
            venue_key=sorted(subfields[i % len(subfields)].venues)[0],
            pub_date=dt.date(2022, 1, 1),
        ))
    for _ in range(n_citations):
        citing = rng.randrange(n_works)
        cited = rng.randrange(n_works)
        if cited == citing:
            cited = (cited + 1) % n_works
        works[citing].referenced_ids.append(works[cited].work_id)
    return Corpus.from_works(works, windows, provenance=f"uniform seed={seed}")
