from .hindex import h_index
from .powerlaw import PowerLawFit, fit_power_law
from .velocity import (COHORT_ALL, COHORT_TOP20, DAYS_PER_YEAR, VelocityRecord,
                       annualized_velocity, days_to_n_citations,
                       top_cited_fraction, velocity_distribution)
from .entropy import (DIRECTION_CITED, DIRECTION_CITING,
                      neighbor_discipline_counts, shannon_entropy,
                      work_interdisciplinarity)
from .flows import FlowMatrix, citation_edges, observed_expected_matrix

__all__ = [
    "h_index", "PowerLawFit", "fit_power_law", "COHORT_ALL", "COHORT_TOP20",
    "DAYS_PER_YEAR", "VelocityRecord", "annualized_velocity",
    "days_to_n_citations", "top_cited_fraction", "velocity_distribution",
    "DIRECTION_CITED", "DIRECTION_CITING", "neighbor_discipline_counts",
    "shannon_entropy", "work_interdisciplinarity", "FlowMatrix",
    "citation_edges", "observed_expected_matrix",
]
