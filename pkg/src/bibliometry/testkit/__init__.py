from .synth import SynthSpec, generate_corpus, uniform_citation_corpus
from .oracles import (oracle_clustering, oracle_h_index, oracle_jaccard_mean,
                      oracle_js_divergence, oracle_pair_counts,
                      oracle_shannon_entropy, oracle_unweighted_clustering)

__all__ = [
    "SynthSpec", "generate_corpus", "uniform_citation_corpus",
    "oracle_clustering", "oracle_h_index", "oracle_jaccard_mean",
    "oracle_js_divergence", "oracle_pair_counts", "oracle_shannon_entropy",
    "oracle_unweighted_clustering",
]
