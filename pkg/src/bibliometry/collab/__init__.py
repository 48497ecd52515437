from .selection import top_authors_by_output
from .index import author_count_sample, collaboration_index
from .international import (CountryPairMatrix, country_pair_matrix,
                            international_pair_ratio, international_rates)
from .industry import (industry_rate, normalize_org_name,
                       top_industry_collaborators,
                       work_is_industry_collaborative)
from .network import CoauthorNetwork, build_coauthor_network, weighted_clustering
from .stability import collaborator_sets, jaccard_stability, subfield_stability

__all__ = [
    "top_authors_by_output", "author_count_sample", "collaboration_index",
    "CountryPairMatrix", "country_pair_matrix", "international_pair_ratio",
    "international_rates", "industry_rate", "normalize_org_name",
    "top_industry_collaborators", "work_is_industry_collaborative",
    "CoauthorNetwork", "build_coauthor_network", "weighted_clustering",
    "collaborator_sets", "jaccard_stability", "subfield_stability",
]
