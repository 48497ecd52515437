"""Cross-subfield citation flows against a size-proportional null model.

Observed counts come from citations whose endpoints are both target works
in scope. The expected count for an (i, j) pair is
(N_i / N) * (N_j / N) * C, i.e. random pairing of citation half-links
that preserves only subfield sizes; the standardized intensity is the
observed-to-expected ratio.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..corpus.models import Corpus, Subfield, TimeWindow
from ..errors import InsufficientDataError


@dataclass
class FlowMatrix:
    subfields: list[Subfield]
    observed: np.ndarray      # int counts, shape (k, k)
    expected: np.ndarray      # float, same shape
    ratio: np.ndarray         # observed/expected; NaN where expected == 0
    sizes: list[int]          # target papers per subfield in scope
    total_citations: int

    def ratio_at(self, source: Subfield, target: Subfield) -> float:
        i = self.subfields.index(source)
        j = self.subfields.index(target)
        return float(self.ratio[i, j])

    def undefined_cells(self) -> list[tuple[Subfield, Subfield]]:
        cells = []
        for i, source in enumerate(self.subfields):
            for j, target in enumerate(self.subfields):
                if self.expected[i, j] == 0.0:
                    cells.append((source, target))
        return cells


def citation_edges(corpus: Corpus, window: TimeWindow | None = None):
    """(source_subfield, target_subfield) per citation between in-scope
    target works."""
    in_scope = {w.work_id: w for w in corpus.iter_target_works(window=window)}
    for work_id in sorted(in_scope):
        work = in_scope[work_id]
        for ref_id in work.referenced_ids:
            cited = in_scope.get(ref_id)
            if cited is not None:
                yield work.subfield, cited.subfield


def observed_expected_matrix(corpus: Corpus, window: TimeWindow | None = None,
                             subfields: list[Subfield] | None = None) -> FlowMatrix:
    """Observed, expected and ratio matrices for one scope.

    Subfields default to those with at least one target work in scope;
    passing an explicit list may introduce zero-size rows whose ratio
    cells are flagged NaN rather than zero.
    """
    if subfields is None:
        present = {w.subfield for w in corpus.iter_target_works(window=window)}
        subfields = [s for s in Subfield if s in present]
    index = {s: i for i, s in enumerate(subfields)}
    k = len(subfields)

    sizes = [0] * k
    for work in corpus.iter_target_works(window=window):
        if work.subfield in index:
            sizes[index[work.subfield]] += 1
    n_total = sum(sizes)

    observed = np.zeros((k, k), dtype=int)
    for source, target in citation_edges(corpus, window):
        if source in index and target in index:
            observed[index[source], index[target]] += 1
    total_citations = int(observed.sum())

    if n_total == 0 or total_citations == 0:
        raise InsufficientDataError(
            f"null model needs papers and citations in scope "
            f"(N={n_total}, C={total_citations})")

    share = np.asarray(sizes, dtype=float) / n_total
    expected = np.outer(share, share) * total_citations
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(expected > 0, observed / expected, np.nan)

    return FlowMatrix(subfields=list(subfields), observed=observed,
                      expected=expected, ratio=ratio, sizes=sizes,
                      total_citations=total_citations)
