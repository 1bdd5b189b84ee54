"""Shared test helpers.

The reference polynomial here is computed with itertools and networkx
only, so agreement with the package oracle is a genuine cross-check,
not the same code run twice.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import settings

from ecpoly import Graph, build_graph

settings.register_profile("ci", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("ci")


def nx_graph(graph: Graph) -> "nx.Graph":
    H = nx.Graph()
    H.add_nodes_from(range(graph.vertex_count))
    H.add_edges_from(graph.edges)
    return H


def reference_counts(graph: Graph, connected: bool) -> "dict[int, int]":
    """Cover counts by size via itertools subsets and networkx connectivity."""
    n = graph.vertex_count
    if n == 0:
        return {0: 1}
    counts: dict[int, int] = {}
    for size in range(graph.edge_count + 1):
        for chosen in combinations(range(graph.edge_count), size):
            H = nx.Graph()
            H.add_nodes_from(range(n))
            H.add_edges_from(graph.edges[e] for e in chosen)
            if any(d == 0 for _, d in H.degree()):
                continue
            if connected and not nx.is_connected(H):
                continue
            counts[size] = counts.get(size, 0) + 1
    return counts


def poly_counts(poly) -> "dict[int, int]":
    return {i: c for i, c in enumerate(poly.coeffs) if c}


def random_connected_graph(rng: random.Random, n: int, m: int) -> Graph:
    """Random spanning tree over shuffled labels plus extra random edges."""
    labels = list(range(n))
    rng.shuffle(labels)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = labels[i], labels[j]
        edges.add((min(u, v), max(u, v)))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for pair in pairs:
        if len(edges) >= m:
            break
        edges.add(pair)
    return build_graph(n, sorted(edges))


@pytest.fixture(scope="session")
def assorted_graphs() -> "list[Graph]":
    """A mixed bag for cross-checks: trees, cycles, dense, bridged."""
    from ecpoly import (
        complete_bipartite_graph,
        complete_graph,
        cycle_graph,
        path_graph,
    )

    graphs = [
        build_graph(0, []),
        build_graph(1, []),
        build_graph(2, [(0, 1)]),
        build_graph(3, [(0, 1)]),
        build_graph(4, [(0, 1), (2, 3)]),
        path_graph(4),
        cycle_graph(4),
        cycle_graph(5),
        complete_graph(4),
        complete_graph(5),
        complete_bipartite_graph(2, 3),
        build_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]),
    ]
    rng = random.Random(7)
    for _ in range(6):
        n = rng.randrange(4, 8)
        m = rng.randrange(n - 1, min(12, n * (n - 1) // 2) + 1)
        graphs.append(random_connected_graph(rng, n, m))
    return graphs
