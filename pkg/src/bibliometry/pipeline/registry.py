"""Registry of the two-level indicator system.

Three dimensions, twelve indicators, each realized as one or more metric
series (scalar per cell, raw sample per cell, or a standalone table) plus
the descriptive overview statistics.
"""
from __future__ import annotations

from dataclasses import dataclass

DIMENSION_IMPACT = "impact_dissemination"
DIMENSION_COLLAB = "collaboration"
DIMENSION_AUTHOR = "author"

SCALAR = "scalar"
SAMPLE = "sample"
TABLE = "table"


@dataclass(frozen=True)
class MetricSpec:
    metric_id: str
    indicator: str
    dimension: str
    statistic: str
    description: str


REGISTRY: tuple[MetricSpec, ...] = (
    # impact and dissemination
    MetricSpec("h_index", "academic_impact", DIMENSION_IMPACT, SCALAR,
               "H-index over the citation counts of works in scope"),
    MetricSpec("venue_h_index", "academic_impact", DIMENSION_IMPACT, TABLE,
               "H-index per conference venue over the full range"),
    MetricSpec("power_law_exponent", "citation_distribution", DIMENSION_IMPACT,
               SCALAR, "rank power-law exponent of the citation distribution"),
    MetricSpec("power_law_scale", "citation_distribution", DIMENSION_IMPACT,
               SCALAR, "fitted citation count of the rank-1 work"),
    MetricSpec("power_law_r2", "citation_distribution", DIMENSION_IMPACT,
               SCALAR, "log-space coefficient of determination of the fit"),
    MetricSpec("days_to_25", "citation_velocity", DIMENSION_IMPACT, SAMPLE,
               "days to reach the overall citation threshold"),
    MetricSpec("days_to_100_top20", "citation_velocity", DIMENSION_IMPACT,
               SAMPLE, "days for top-20%-cited works to reach the high threshold"),
    MetricSpec("interdisciplinarity_cited", "interdisciplinarity",
               DIMENSION_IMPACT, SAMPLE,
               "per-work entropy over disciplines of cited references"),
    MetricSpec("interdisciplinarity_citing", "interdisciplinarity",
               DIMENSION_IMPACT, SAMPLE,
               "per-work entropy over disciplines of citing works"),
    MetricSpec("sankey_flows", "interdisciplinarity", DIMENSION_IMPACT, TABLE,
               "discipline shares of cited and citing neighbors per subfield"),
    MetricSpec("observed_expected_ratio", "knowledge_flow", DIMENSION_IMPACT,
               TABLE, "cross-subfield citation flows against the size null model"),
    # collaboration characteristics
    MetricSpec("collaboration_index", "authors_per_paper", DIMENSION_COLLAB,
               SCALAR, "mean number of authors per work"),
    MetricSpec("authors_per_paper", "authors_per_paper", DIMENSION_COLLAB,
               SAMPLE, "per-work author counts"),
    MetricSpec("international_simple_rate", "international_collaboration",
               DIMENSION_COLLAB, SCALAR,
               "share of works with authors from two or more countries"),
    MetricSpec("international_pair_rate", "international_collaboration",
               DIMENSION_COLLAB, SCALAR,
               "mean share of cross-country author pairs per work"),
    MetricSpec("country_pairs", "international_collaboration",
               DIMENSION_COLLAB, TABLE,
               "cross-country author-pair counts for chord rendering"),
    MetricSpec("industry_rate", "industry_collaboration", DIMENSION_COLLAB,
               SCALAR, "share of works with at least one industry author"),
    MetricSpec("top_industry_collaborators", "industry_collaboration",
               DIMENSION_COLLAB, TABLE,
               "industry organizations ranked by collaborating works"),
    MetricSpec("weighted_clustering", "collaboration_intensity",
               DIMENSION_COLLAB, SCALAR,
               "global weighted clustering of the top-author network"),
    MetricSpec("coauthor_edges", "collaboration_intensity", DIMENSION_COLLAB,
               TABLE, "weighted co-authorship edge list for external tooling"),
    MetricSpec("jaccard_stability", "collaboration_stability",
               DIMENSION_COLLAB, SCALAR,
               "mean collaborator-set overlap across adjacent windows"),
    # author characteristics
    MetricSpec("author_h_index", "author_productivity", DIMENSION_AUTHOR,
               SAMPLE, "per-author H-index distribution"),
    MetricSpec("author_topic_mobility", "topic_mobility", DIMENSION_AUTHOR,
               SAMPLE, "per-author mean topic divergence across windows"),
    MetricSpec("field_topic_mobility", "topic_mobility", DIMENSION_AUTHOR,
               SCALAR, "mean author mobility over the top authors of a subfield"),
    MetricSpec("migration_flows", "topic_mobility", DIMENSION_AUTHOR, TABLE,
               "dominant-topic migration directions with net flows"),
    # descriptive overview
    MetricSpec("yearly_counts", "descriptive", "descriptive", TABLE,
               "annual papers, distinct authors and citations per subfield"),
)

_BY_ID = {spec.metric_id: spec for spec in REGISTRY}

INDICATORS = tuple(dict.fromkeys(spec.indicator for spec in REGISTRY
                                 if spec.indicator != "descriptive"))


def all_metric_ids() -> list[str]:
    return [spec.metric_id for spec in REGISTRY]


def metric_spec(metric_id: str) -> MetricSpec:
    if metric_id not in _BY_ID:
        raise ValueError(f"unknown metric id {metric_id!r}")
    return _BY_ID[metric_id]


def selected_specs(enabled: list[str] | None) -> list[MetricSpec]:
    if not enabled:
        return list(REGISTRY)
    return [_BY_ID[m] for m in all_metric_ids() if m in set(enabled)]
