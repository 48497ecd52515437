import random

import pytest

from bibliometry.collab import (CoauthorNetwork, build_coauthor_network,
                                weighted_clustering)
from bibliometry.corpus import Corpus, Subfield
from bibliometry.errors import InsufficientDataError
from bibliometry.testkit import oracle_clustering, oracle_unweighted_clustering
from tests.conftest import make_work


def network_from_edges(edges):
    net = CoauthorNetwork()
    nodes = set()
    for a, b, w in edges:
        net.add_edge(a, b, w)
        nodes.update((a, b))
    net.nodes = sorted(nodes)
    return net


def random_network(rng, n_nodes, edge_prob=0.5, max_weight=5):
    net = CoauthorNetwork()
    names = [f"n{i}" for i in range(n_nodes)]
    for i in range(n_nodes):
        for j in range(i + 1, n_nodes):
            if rng.random() < edge_prob:
                net.add_edge(names[i], names[j], rng.randint(1, max_weight))
    net.nodes = names
    return net


def test_uniform_triangle_fully_closed():
    net = network_from_edges([("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])
    global_c, per_node = weighted_clustering(net)
    assert global_c == 1.0
    assert all(v == 1.0 for v in per_node.values())


def test_three_node_path_all_zero():
    net = network_from_edges([("a", "b", 1), ("b", "c", 1)])
    global_c, per_node = weighted_clustering(net)
    assert global_c == 0.0
    assert per_node == {"a": 0.0, "b": 0.0, "c": 0.0}


def test_star_graph_all_zero():
    net = network_from_edges([("hub", x, 3) for x in ("a", "b", "c", "d")])
    global_c, _ = weighted_clustering(net)
    assert global_c == 0.0


def test_weighted_triangle_with_pendant_matches_oracle():
    net = network_from_edges([("a", "b", 1), ("b", "c", 2), ("a", "c", 3),
                              ("c", "d", 1)])
    _, per_node = weighted_clustering(net)
    assert per_node == oracle_clustering(net)


def test_uniform_clique_all_one():
    nodes = [f"n{i}" for i in range(6)]
    net = network_from_edges([(a, b, 4) for i, a in enumerate(nodes)
                              for b in nodes[i + 1:]])
    global_c, per_node = weighted_clustering(net)
    assert global_c == 1.0
    assert all(v == 1.0 for v in per_node.values())


def test_matches_enumeration_oracle_on_seeded_graphs():
    rng = random.Random(99)
    for _ in range(30):
        net = random_network(rng, rng.randint(2, 14))
        if not net.nodes:
            continue
        _, per_node = weighted_clustering(net)
        oracle = oracle_clustering(net)
        for node in net.nodes:
            assert per_node[node] == pytest.approx(oracle[node], abs=1e-12)


def test_equal_weights_reduce_to_unweighted_exactly():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 12)
        net = random_network(rng, n, edge_prob=0.5, max_weight=1)
        _, per_node = weighted_clustering(net)
        unweighted = oracle_unweighted_clustering(net)
        assert per_node == unweighted  # exact equality, no tolerance


def test_new_edge_only_affects_its_triangle_neighborhood():
    """Adding an edge (x, y) may change x, y and common neighbors of the
    two endpoints; every other node's coefficient stays put (the weight
    normalization constant cancels inside the closure ratio)."""
    rng = random.Random(31)
    for _ in range(20):
        net = random_network(rng, 10, edge_prob=0.4)
        non_edges = [(a, b) for i, a in enumerate(net.nodes)
                     for b in net.nodes[i + 1:] if (a, b) not in net.weights]
        if not non_edges:
            continue
        _, before = weighted_clustering(net)
        x, y = rng.choice(non_edges)
        adjacency = net.neighbors()
        affected = {x, y} | (set(adjacency[x]) & set(adjacency[y]))
        net.add_edge(x, y, rng.randint(1, 8))
        _, after = weighted_clustering(net)
        for node in net.nodes:
            if node not in affected:
                assert after[node] == pytest.approx(before[node], abs=1e-12)


def test_empty_network_is_insufficient():
    with pytest.raises(InsufficientDataError):
        weighted_clustering(CoauthorNetwork())


def test_self_loop_rejected():
    net = CoauthorNetwork()
    with pytest.raises(ValueError):
        net.add_edge("a", "a")


def test_build_network_counts_coauthored_works(default_windows):
    works = [make_work("W1", authors=("a", "b", "c")),
             make_work("W2", authors=("a", "b")),
             make_work("W3", authors=("d",))]
    corpus = Corpus.from_works(works, default_windows)
    net = build_coauthor_network(corpus, Subfield.AI, None, top_k=10)
    assert net.weight("a", "b") == 2
    assert net.weight("a", "c") == 1
    assert net.normalized_weight("a", "c") == 0.5
    assert "d" in net.nodes  # isolated but active author stays a node
    global_c, per_node = weighted_clustering(net)
    assert per_node["d"] == 0.0


def test_build_network_respects_top_k(default_windows):
    # "a" has 2 works, everyone else 1: top-1 selection keeps only "a"
    works = [make_work("W1", authors=("a", "b")),
             make_work("W2", authors=("a", "c"))]
    corpus = Corpus.from_works(works, default_windows)
    net = build_coauthor_network(corpus, Subfield.AI, None, top_k=1)
    assert net.nodes == ["a"]
    assert net.weights == {}
