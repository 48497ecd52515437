"""International collaboration: pair-based ratios and country-pair counts.

Authors with unknown countries are excluded from pairing throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..corpus.models import Corpus, Subfield, TimeWindow, WorkRecord
from ..errors import InsufficientDataError


def international_pair_ratio(work: WorkRecord) -> float | None:
    """Cross-country author pairs over all author pairs of one work.

    None when fewer than 2 authors have a known country.
    """
    countries = [a.country_code for a in work.authorships if a.has_known_country]
    n = len(countries)
    if n < 2:
        return None
    cross = 0
    for i in range(n):
        for j in range(i + 1, n):
            if countries[i] != countries[j]:
                cross += 1
    return cross / (n * (n - 1) / 2)


def international_rates(corpus: Corpus, window: TimeWindow | None,
                        subfield: Subfield | None) -> tuple[float, float]:
    """(simple_ratio, pair_ratio_mean) for one scope.

    simple_ratio is the fraction of works with authors from at least two
    distinct known countries; pair_ratio_mean averages the pair-based
    ratio over works where it is defined (0.0 when defined nowhere).
    """
    n_works = 0
    n_international = 0
    ratios = []
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        n_works += 1
        known = {a.country_code for a in work.authorships if a.has_known_country}
        if len(known) >= 2:
            n_international += 1
        ratio = international_pair_ratio(work)
        if ratio is not None:
            ratios.append(ratio)
    if n_works == 0:
        raise InsufficientDataError("no works in scope for international rates")
    pair_mean = sum(ratios) / len(ratios) if ratios else 0.0
    return n_international / n_works, pair_mean


@dataclass
class CountryPairMatrix:
    """Symmetric cross-country pair counts; same-country pairs never count."""

    countries: list[str] = field(default_factory=list)
    counts: dict[tuple[str, str], int] = field(default_factory=dict)
    participation: dict[str, int] = field(default_factory=dict)

    def count(self, a: str, b: str) -> int:
        return self.counts.get((min(a, b), max(a, b)), 0)

    @property
    def total_pairs(self) -> int:
        return sum(self.counts.values())

    def add_pair(self, a: str, b: str, n: int = 1) -> None:
        if a == b:
            return
        key = (min(a, b), max(a, b))
        self.counts[key] = self.counts.get(key, 0) + n
        self.participation[a] = self.participation.get(a, 0) + n
        self.participation[b] = self.participation.get(b, 0) + n
        for c in (a, b):
            if c not in self.countries:
                self.countries.append(c)
        self.countries.sort()


def country_pair_matrix(corpus: Corpus, window: TimeWindow | None = None,
                        subfield: Subfield | None = None) -> CountryPairMatrix:
    """Accumulate every unordered cross-country author pair over the scope."""
    matrix = CountryPairMatrix()
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        countries = [a.country_code for a in work.authorships if a.has_known_country]
        for i in range(len(countries)):
            for j in range(i + 1, len(countries)):
                matrix.add_pair(countries[i], countries[j])
    return matrix
