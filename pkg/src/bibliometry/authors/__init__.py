from .productivity import author_h_index
from .topics import TopicDistribution, js_divergence, topic_distribution
from .mobility import (MigrationFlow, author_mobility, dominant_discipline,
                       field_mobility, migration_flows)

__all__ = [
    "author_h_index", "TopicDistribution", "js_divergence",
    "topic_distribution", "MigrationFlow", "author_mobility",
    "dominant_discipline", "field_mobility", "migration_flows",
]
