"""Weighted co-authorship networks and their clustering coefficient.

Edge weight is the number of co-authored works in scope; weights are
normalized by the maximum edge weight of the same network. A node's
coefficient is the weighted closure of triangles around it, combining
the two center edge weights with their geometric mean; nodes with
degree < 2 (or a zero denominator) score 0. The global coefficient is
the arithmetic mean over all nodes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..corpus.models import Corpus, Subfield, TimeWindow
from ..errors import InsufficientDataError
from .selection import top_authors_by_output


@dataclass
class CoauthorNetwork:
    nodes: list[str] = field(default_factory=list)
    weights: dict[tuple[str, str], int] = field(default_factory=dict)

    def add_edge(self, a: str, b: str, weight: int = 1) -> None:
        if a == b:
            raise ValueError("self-loops are not allowed")
        key = (min(a, b), max(a, b))
        self.weights[key] = self.weights.get(key, 0) + weight

    def weight(self, a: str, b: str) -> int:
        return self.weights.get((min(a, b), max(a, b)), 0)

    @property
    def max_weight(self) -> int:
        return max(self.weights.values()) if self.weights else 0

    def normalized_weight(self, a: str, b: str) -> float:
        return self.weight(a, b) / self.max_weight

    def neighbors(self) -> dict[str, list[str]]:
        adjacency: dict[str, list[str]] = {node: [] for node in self.nodes}
        for (a, b) in sorted(self.weights):
            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)
        return adjacency

    def edge_rows(self) -> list[tuple[str, str, int]]:
        """Sorted (author_a, author_b, weight) rows for edge-list export."""
        return [(a, b, self.weights[(a, b)]) for a, b in sorted(self.weights)]


def build_coauthor_network(corpus: Corpus, subfield: Subfield | None,
                           window: TimeWindow | None, top_k: int = 1000,
                           per_window_selection: bool = False) -> CoauthorNetwork:
    """Network over the top_k most productive authors of the subfield.

    Selection is global (full range) unless per_window_selection is set;
    nodes are selected authors with at least one work in scope, so an
    author publishing alone still appears as an isolated node.
    """
    selection_window = window if per_window_selection else None
    selected = set(top_authors_by_output(corpus, subfield, top_k,
                                         window=selection_window))
    network = CoauthorNetwork()
    active: set[str] = set()
    for work in corpus.iter_target_works(subfield=subfield, window=window):
        present = sorted({a.author_id for a in work.authorships} & selected)
        active.update(present)
        for i in range(len(present)):
            for j in range(i + 1, len(present)):
                network.add_edge(present[i], present[j])
    network.nodes = sorted(active)
    return network


def weighted_clustering(network: CoauthorNetwork) -> tuple[float, dict[str, float]]:
    """(global mean, per-node coefficients) for one network."""
    if not network.nodes:
        raise InsufficientDataError("empty co-authorship network")
    adjacency = network.neighbors()
    edges = set(network.weights)
    max_weight = network.max_weight
    per_node: dict[str, float] = {}
    for node in network.nodes:
        neighbors = adjacency.get(node, [])
        if len(neighbors) < 2:
            per_node[node] = 0.0
            continue
        numerator = 0.0
        denominator = 0.0
        for i in range(len(neighbors)):
            w_i = network.weight(node, neighbors[i]) / max_weight
            for j in range(i + 1, len(neighbors)):
                w_j = network.weight(node, neighbors[j]) / max_weight
                g = math.sqrt(w_i * w_j)
                denominator += g
                pair = (min(neighbors[i], neighbors[j]),
                        max(neighbors[i], neighbors[j]))
                if pair in edges:
                    numerator += g
        per_node[node] = numerator / denominator if denominator > 0 else 0.0
    global_mean = sum(per_node.values()) / len(per_node)
    return global_mean, per_node
