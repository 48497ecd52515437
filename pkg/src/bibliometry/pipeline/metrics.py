"""Metrics stage: evaluate every enabled indicator over the corpus and
bundle the results for the export stage.

All series are keyed (metric_id, subfield, window label); cells whose
metric is undefined (empty scope, degenerate fit) are simply absent, per
the sparse-output convention.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .. import authors as authors_mod
from .. import collab as collab_mod
from .. import impact as impact_mod
from ..corpus.models import Corpus, Subfield, TimeWindow
from ..corpus.stats import yearly_counts
from ..errors import InsufficientDataError
from .config import MetricsSection
from .registry import selected_specs

ALL_WINDOWS = "all"
BUNDLE_SCHEMA_VERSION = 1


@dataclass
class MetricsBundle:
    params: dict
    scalars: list[dict] = field(default_factory=list)
    samples: dict[str, list[dict]] = field(default_factory=dict)
    tables: dict[str, dict] = field(default_factory=dict)

    def add_scalar(self, metric_id, subfield, window, value):
        self.scalars.append({"metric_id": metric_id, "subfield": subfield,
                             "window": window, "value": value})

    def add_sample(self, metric_id, subfield, window, values):
        self.samples.setdefault(metric_id, []).append(
            {"subfield": subfield, "window": window,
             "values": [float(v) for v in values]})

    def add_table(self, name, columns, rows):
        self.tables[name] = {"columns": list(columns),
                             "rows": [list(r) for r in rows]}

    def to_json(self) -> str:
        payload = {
            "schema_version": BUNDLE_SCHEMA_VERSION,
            "params": self.params,
            "scalars": self.scalars,
            "samples": self.samples,
            "tables": self.tables,
        }
        return json.dumps(payload, sort_keys=True, indent=1, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "MetricsBundle":
        payload = json.loads(text)
        bundle = cls(params=payload["params"])
        bundle.scalars = payload["scalars"]
        bundle.samples = payload["samples"]
        bundle.tables = payload["tables"]
        return bundle


def _window_label(window: TimeWindow | None) -> str:
    return window.label if window is not None else ALL_WINDOWS


def _pair_label(first: TimeWindow, second: TimeWindow) -> str:
    return f"{first.label}->{second.label}"


def compute_sankey_rows(corpus: Corpus, subfields: list[Subfield],
                        directions=("cited", "citing")) -> list[list]:
    """(subfield, external_discipline, direction, count, share) rows;
    shares sum to 1 per (subfield, direction)."""
    rows = []
    for subfield in subfields:
        for direction in directions:
            counts: Counter = Counter()
            for work in corpus.iter_target_works(subfield=subfield):
                counts.update(impact_mod.neighbor_discipline_counts(
                    work, corpus, direction))
            total = sum(counts.values())
            for discipline in sorted(counts):
                rows.append([subfield.value, discipline, direction,
                             counts[discipline], counts[discipline] / total])
    return rows


def compute_metrics(corpus: Corpus, cfg: MetricsSection) -> MetricsBundle:
    subfields = [s for s in cfg.selected_subfields()
                 if s in corpus.observed_subfields()]
    windows = corpus.windows
    wanted = {spec.metric_id for spec in selected_specs(cfg.enabled)}
    bundle = MetricsBundle(params={
        "subfields": [s.value for s in subfields],
        "windows": [w.label for w in windows],
        "velocity_threshold": cfg.velocity_threshold,
        "high_impact_threshold": cfg.high_impact_threshold,
        "clustering_top_k": cfg.clustering_top_k,
        "stability_top_k": cfg.stability_top_k,
        "mobility_top_k": cfg.mobility_top_k,
        "js_log_base": cfg.js_log_base,
        "migration_top_n": cfg.migration_top_n,
        "top_collaborators_k": cfg.top_collaborators_k,
        "provenance": corpus.provenance,
    })

    scopes = [(s, w) for s in subfields for w in windows]

    # -- per-cell scalars and samples --------------------------------------
    for subfield, window in scopes:
        works = list(corpus.iter_target_works(subfield=subfield, window=window))
        if not works:
            continue
        label = _window_label(window)

        if "h_index" in wanted:
            bundle.add_scalar("h_index", subfield.value, label,
                              impact_mod.h_index(w.citation_count for w in works))
        if {"power_law_exponent", "power_law_scale", "power_law_r2"} & wanted:
            try:
                fit = impact_mod.fit_power_law(w.citation_count for w in works)
            except InsufficientDataError:
                fit = None
            if fit is not None:
                if "power_law_exponent" in wanted:
                    bundle.add_scalar("power_law_exponent", subfield.value,
                                      label, fit.exponent)
                if "power_law_scale" in wanted:
                    bundle.add_scalar("power_law_scale", subfield.value,
                                      label, fit.scale)
                if "power_law_r2" in wanted and fit.r_squared is not None:
                    bundle.add_scalar("power_law_r2", subfield.value,
                                      label, fit.r_squared)
        if "days_to_25" in wanted:
            bundle.add_sample("days_to_25", subfield.value, label,
                              impact_mod.velocity_distribution(
                                  corpus, window, subfield,
                                  cfg.velocity_threshold, impact_mod.COHORT_ALL))
        if "days_to_100_top20" in wanted:
            bundle.add_sample("days_to_100_top20", subfield.value, label,
                              impact_mod.velocity_distribution(
                                  corpus, window, subfield,
                                  cfg.high_impact_threshold,
                                  impact_mod.COHORT_TOP20))
        for direction, metric_id in (("cited", "interdisciplinarity_cited"),
                                     ("citing", "interdisciplinarity_citing")):
            if metric_id not in wanted:
                continue
            values = [impact_mod.work_interdisciplinarity(w, corpus, direction)
                      for w in works]
            bundle.add_sample(metric_id, subfield.value, label,
                              [v for v in values if v is not None])
        if "authors_per_paper" in wanted:
            bundle.add_sample("authors_per_paper", subfield.value, label,
                              [w.n_authors for w in works])
        if "collaboration_index" in wanted:
            bundle.add_scalar("collaboration_index", subfield.value, label,
                              collab_mod.collaboration_index(corpus, window,
                                                             subfield))
        if {"international_simple_rate", "international_pair_rate"} & wanted:
            simple, pair_mean = collab_mod.international_rates(corpus, window,
                                                               subfield)
            if "international_simple_rate" in wanted:
                bundle.add_scalar("international_simple_rate", subfield.value,
                                  label, simple)
            if "international_pair_rate" in wanted:
                bundle.add_scalar("international_pair_rate", subfield.value,
                                  label, pair_mean)
        if "industry_rate" in wanted:
            bundle.add_scalar("industry_rate", subfield.value, label,
                              collab_mod.industry_rate(corpus, window, subfield))
        if "weighted_clustering" in wanted:
            network = collab_mod.build_coauthor_network(
                corpus, subfield, window, top_k=cfg.clustering_top_k)
            if network.nodes:
                global_c, _ = collab_mod.weighted_clustering(network)
                bundle.add_scalar("weighted_clustering", subfield.value,
                                  label, global_c)

    # -- full-range cells ----------------------------------------------------
    for subfield in subfields:
        works = list(corpus.iter_target_works(subfield=subfield))
        if not works:
            continue
        if "h_index" in wanted:
            bundle.add_scalar("h_index", subfield.value, ALL_WINDOWS,
                              impact_mod.h_index(w.citation_count for w in works))
        if "author_h_index" in wanted:
            author_ids = sorted({a.author_id for w in works
                                 for a in w.authorships})
            bundle.add_sample("author_h_index", subfield.value, ALL_WINDOWS,
                              [authors_mod.author_h_index(corpus, a)
                               for a in author_ids])
        if {"author_topic_mobility", "field_topic_mobility"} & wanted:
            mobilities = []
            for author_id in collab_mod.top_authors_by_output(
                    corpus, subfield, cfg.mobility_top_k):
                value = authors_mod.author_mobility(corpus, author_id, windows,
                                                    base=cfg.js_log_base)
                if value is not None:
                    mobilities.append(value)
            if "author_topic_mobility" in wanted:
                bundle.add_sample("author_topic_mobility", subfield.value,
                                  ALL_WINDOWS, mobilities)
            if "field_topic_mobility" in wanted and mobilities:
                bundle.add_scalar("field_topic_mobility", subfield.value,
                                  ALL_WINDOWS,
                                  sum(mobilities) / len(mobilities))

    # -- window-pair scalars ---------------------------------------------------
    if "jaccard_stability" in wanted:
        for subfield in subfields:
            scope = collab_mod.top_authors_by_output(corpus, subfield,
                                                     cfg.stability_top_k)
            for first, second in zip(windows, windows[1:]):
                try:
                    value = collab_mod.jaccard_stability(corpus,
                                                         (first, second), scope)
                except InsufficientDataError:
                    continue
                bundle.add_scalar("jaccard_stability", subfield.value,
                                  _pair_label(first, second), value)

    # -- tables ------------------------------------------------------------------
    if "venue_h_index" in wanted:
        rows = []
        by_venue: dict[str, list[int]] = {}
        for work in corpus.iter_target_works():
            by_venue.setdefault(work.venue_key, []).append(work.citation_count)
        for venue in sorted(by_venue):
            from ..corpus.models import subfield_for_venue
            sub = subfield_for_venue(venue)
            rows.append([venue, sub.value if sub else "",
                         impact_mod.h_index(by_venue[venue])])
        bundle.add_table("venue_h_index", ["venue", "subfield", "h_index"], rows)

    if "observed_expected_ratio" in wanted:
        rows = []
        for window in [None, *windows]:
            try:
                flow = impact_mod.observed_expected_matrix(corpus, window)
            except InsufficientDataError:
                continue
            label = _window_label(window)
            for i, source in enumerate(flow.subfields):
                for j, target in enumerate(flow.subfields):
                    ratio = flow.ratio[i, j]
                    rows.append([label, source.value, target.value,
                                 int(flow.observed[i, j]),
                                 float(flow.expected[i, j]),
                                 None if np.isnan(ratio) else float(ratio)])
        bundle.add_table("observed_expected_ratio",
                         ["window", "from_subfield", "to_subfield",
                          "observed", "expected", "ratio"], rows)

    if "sankey_flows" in wanted:
        bundle.add_table("sankey_flows",
                         ["subfield", "external_discipline", "direction",
                          "count", "share"],
                         compute_sankey_rows(corpus, subfields))

    if "country_pairs" in wanted:
        pair_rows = []
        total_rows = []
        for subfield, window in scopes:
            matrix = collab_mod.country_pair_matrix(corpus, window, subfield)
            label = _window_label(window)
            for (a, b) in sorted(matrix.counts):
                pair_rows.append([subfield.value, label, a, b,
                                  matrix.counts[(a, b)]])
            for country in sorted(matrix.participation):
                total_rows.append([subfield.value, label, country,
                                   matrix.participation[country]])
        bundle.add_table("country_pairs",
                         ["subfield", "window", "country_a", "country_b",
                          "count"], pair_rows)
        bundle.add_table("country_pair_totals",
                         ["subfield", "window", "country", "total"], total_rows)

    if "top_industry_collaborators" in wanted:
        rows = []
        for subfield in subfields:
            ranked = collab_mod.top_industry_collaborators(
                corpus, subfield, cfg.top_collaborators_k)
            for rank, (org, count) in enumerate(ranked, 1):
                rows.append([subfield.value, rank, org, count])
        bundle.add_table("top_industry_collaborators",
                         ["subfield", "rank", "organization", "n_works"], rows)

    if "coauthor_edges" in wanted:
        rows = []
        for subfield, window in scopes:
            network = collab_mod.build_coauthor_network(
                corpus, subfield, window, top_k=cfg.clustering_top_k)
            for a, b, weight in network.edge_rows():
                rows.append([subfield.value, _window_label(window), a, b, weight])
        bundle.add_table("coauthor_edges",
                         ["subfield", "window", "author_a", "author_b",
                          "weight"], rows)

    if "migration_flows" in wanted:
        flows = authors_mod.migration_flows(corpus, windows,
                                            cfg.migration_top_n)
        bundle.add_table("migration_flows",
                         ["from_discipline", "to_discipline", "count", "net"],
                         [[f.from_discipline, f.to_discipline, f.count, f.net]
                          for f in flows])

    if "yearly_counts" in wanted:
        bundle.add_table("yearly_counts",
                         ["year", "subfield", "n_papers", "n_distinct_authors",
                          "n_citations_received"],
                         [[r.year, r.subfield, r.n_papers, r.n_distinct_authors,
                           r.n_citations_received]
                          for r in yearly_counts(corpus)])

    bundle.scalars.sort(key=lambda r: (r["metric_id"], r["subfield"], r["window"]))
    return bundle


def write_bundle(bundle: MetricsBundle, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(bundle.to_json() + "\n", encoding="utf-8")


def read_bundle(path: Path) -> MetricsBundle:
    return MetricsBundle.from_json(Path(path).read_text(encoding="utf-8"))
