"""Brute-force oracles for the indicator engine.

These share no computation code with the engine modules: each one
re-derives its quantity by direct enumeration or through a different
identity, trading speed for obviousness. They exist to back tests and
refuse inputs large enough that enumeration would be slow.
"""
from __future__ import annotations

import math

import scipy.stats

from ..collab.network import CoauthorNetwork

_MAX_ORACLE_NODES = 200


def oracle_h_index(citation_counts: list[int]) -> int:
    """Scan every candidate h from n down to 0 and test the definition."""
    counts = list(citation_counts)
    for candidate in range(len(counts), -1, -1):
        if sum(1 for c in counts if c >= candidate) >= candidate:
            return candidate
    return 0


def oracle_pair_counts(countries: list[str]) -> tuple[int, int]:
    """(total_pairs, cross_country_pairs) by explicit double loop over
    the known-country author list of one work."""
    total = 0
    cross = 0
    for i in range(len(countries)):
        for j in range(i + 1, len(countries)):
            total += 1
            if countries[i] != countries[j]:
                cross += 1
    return total, cross


def oracle_clustering(network: CoauthorNetwork) -> dict[str, float]:
    """Per-node weighted triangle closure by iterating every node pair
    pair, adjacency checked directly against the edge dict."""
    if len(network.nodes) > _MAX_ORACLE_NODES:
        raise ValueError(
            f"oracle refuses networks over {_MAX_ORACLE_NODES} nodes")
    nodes = list(network.nodes)
    max_w = network.max_weight

    def connected(a: str, b: str) -> bool:
        return (min(a, b), max(a, b)) in network.weights

    values: dict[str, float] = {}
    for node in nodes:
        numerator = 0.0
        denominator = 0.0
        others = [n for n in nodes if n != node]
        for i in range(len(others)):
            for j in range(i + 1, len(others)):
                a, b = others[i], others[j]
                if not (connected(node, a) and connected(node, b)):
                    continue
                g = math.sqrt((network.weight(node, a) / max_w)
                              * (network.weight(node, b) / max_w))
                denominator += g
                if connected(a, b):
                    numerator += g
        values[node] = numerator / denominator if denominator > 0 else 0.0
    return values


def oracle_unweighted_clustering(network: CoauthorNetwork) -> dict[str, float]:
    """Classic local clustering: closed neighbor pairs / possible pairs."""
    if len(network.nodes) > _MAX_ORACLE_NODES:
        raise ValueError(
            f"oracle refuses networks over {_MAX_ORACLE_NODES} nodes")

    def connected(a: str, b: str) -> bool:
        return (min(a, b), max(a, b)) in network.weights

    values: dict[str, float] = {}
    for node in network.nodes:
        neighbors = [n for n in network.nodes
                     if n != node and connected(node, n)]
        k = len(neighbors)
        if k < 2:
            values[node] = 0.0
            continue
        triangles = 0
        for i in range(k):
            for j in range(i + 1, k):
                if connected(neighbors[i], neighbors[j]):
                    triangles += 1
        values[node] = triangles / (k * (k - 1) / 2)
    return values


def oracle_shannon_entropy(proportions: list[float]) -> float:
    """scipy's entropy (natural log) as the independent route."""
    return float(scipy.stats.entropy(proportions))


def oracle_js_divergence(p: dict[str, float], q: dict[str, float],
                         base: float = 2.0) -> float:
    """JS via the entropy identity H(m) - (H(p) + H(q)) / 2, not the
    KL-sum definition the engine uses."""
    keys = sorted(set(p) | set(q))
    pv = [p.get(k, 0.0) for k in keys]
    qv = [q.get(k, 0.0) for k in keys]
    mv = [(a + b) / 2.0 for a, b in zip(pv, qv)]

    def entropy(vec: list[float]) -> float:
        return -sum(v * math.log(v, base) for v in vec if v > 0)

    return entropy(mv) - (entropy(pv) + entropy(qv)) / 2.0


def oracle_jaccard_mean(set_pairs: list[tuple[set[str], set[str]]]) -> float:
    """Mean |A & B| / |A | B| over pairs with a nonempty union, computed
    with explicit membership counting rather than set operators."""
    scores = []
    for before, after in set_pairs:
        union = 0
        intersection = 0
        for member in before | after:
            union += 1
            if member in before and member in after:
                intersection += 1
        if union:
            scores.append(intersection / union)
    if not scores:
        raise ValueError("no pair with a nonempty union")
    return sum(scores) / len(scores)
