import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nx_graph, poly_counts, random_connected_graph, reference_counts
from ecpoly import (
    BadParameters,
    DEFAULT_CONFIG,
    IntPolynomial,
    ONE,
    OracleConfig,
    SizeCapExceeded,
    ZERO,
    build_graph,
    complete_graph,
    connected_edge_cover_polynomial,
    cycle_graph,
    edge_cover_polynomial,
    enumerate_connected_graphs,
    is_connected,
    path_graph,
    petersen_graph,
    spanning_tree_count,
)


@st.composite
def graph_st(draw, max_n=5):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=8) if pairs else st.just([]))
    return build_graph(n, chosen)


def test_config_validation():
    with pytest.raises(BadParameters):
        OracleConfig(max_edges=-1)
    with pytest.raises(BadParameters):
        OracleConfig(max_edges=63)
    with pytest.raises(BadParameters):
        OracleConfig(workers=0)
    assert DEFAULT_CONFIG.workers == 1


def test_conventions():
    assert connected_edge_cover_polynomial(build_graph(0, [])) == ONE
    assert connected_edge_cover_polynomial(build_graph(1, [])) == ZERO
    assert connected_edge_cover_polynomial(build_graph(3, [(0, 1)])) == ZERO
    assert connected_edge_cover_polynomial(build_graph(4, [(0, 1), (2, 3)])) == ZERO
    assert connected_edge_cover_polynomial(build_graph(2, [(0, 1)])) == IntPolynomial([0, 1])
    assert edge_cover_polynomial(build_graph(0, [])) == ONE
    assert edge_cover_polynomial(build_graph(1, [])) == ZERO
    # without the connectivity requirement, two disjoint edges do cover
    assert edge_cover_polynomial(build_graph(4, [(0, 1), (2, 3)])) == IntPolynomial([0, 0, 1])


def test_size_cap():
    g = petersen_graph()
    with pytest.raises(SizeCapExceeded):
        connected_edge_cover_polynomial(g, OracleConfig(max_edges=14))
    with pytest.raises(SizeCapExceeded):
        edge_cover_polynomial(g, OracleConfig(max_edges=14))
    assert not connected_edge_cover_polynomial(g, OracleConfig(max_edges=15)).is_zero()


def test_matches_reference_on_connected_corpus():
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            assert poly_counts(connected_edge_cover_polynomial(g)) == reference_counts(g, True)


def test_matches_reference_on_assorted(assorted_graphs):
    for g in assorted_graphs:
        if g.edge_count > 12:
            continue
        assert poly_counts(connected_edge_cover_polynomial(g)) == reference_counts(g, True)
        assert poly_counts(edge_cover_polynomial(g)) == reference_counts(g, False)


@given(graph_st())
def test_matches_reference_random(g):
    assert poly_counts(connected_edge_cover_polynomial(g)) == reference_counts(g, True)
    assert poly_counts(edge_cover_polynomial(g)) == reference_counts(g, False)


def test_tree_polynomials_are_monomials():
    for n in range(2, 10):
        assert connected_edge_cover_polynomial(path_graph(n)) == IntPolynomial.from_terms({n - 1: 1})
    star = build_graph(6, [(0, i) for i in range(1, 6)])
    assert connected_edge_cover_polynomial(star) == IntPolynomial.from_terms({5: 1})


def test_cycle_polynomials():
    for n in range(3, 10):
        expect = IntPolynomial.from_terms({n: 1, n - 1: n})
        assert connected_edge_cover_polynomial(cycle_graph(n)) == expect


def test_connected_shape_invariants(assorted_graphs):
    for g in assorted_graphs:
        if g.vertex_count < 2 or not is_connected(g):
            continue
        p = connected_edge_cover_polynomial(g)
        assert p.degree() == g.edge_count
        assert p.coefficient(g.edge_count) == 1
        assert p.min_support() == g.vertex_count - 1
        assert all(c >= 0 for c in p.coeffs)


def test_petersen_polynomial():
    p = connected_edge_cover_polynomial(petersen_graph())
    assert p.coeffs[9:] == (2000, 2172, 1230, 445, 105, 15, 1)
    assert p.min_support() == 9


def test_parallel_equals_serial():
    graphs = [petersen_graph(), cycle_graph(8), complete_graph(5)]
    rng = random.Random(3)
    graphs.append(random_connected_graph(rng, 9, 14))
    for g in graphs:
        serial = connected_edge_cover_polynomial(g, OracleConfig(workers=1))
        for workers in (2, 4):
            parallel = connected_edge_cover_polynomial(g, OracleConfig(workers=workers))
            assert parallel.coeffs == serial.coeffs
            assert parallel.to_text() == serial.to_text()


# -- spanning trees --------------------------------------------------------


def test_spanning_tree_known_values():
    assert spanning_tree_count(complete_graph(4)) == 16
    assert spanning_tree_count(complete_graph(5)) == 125
    assert spanning_tree_count(complete_graph(6)) == 1296
    assert spanning_tree_count(petersen_graph()) == 2000
    for n in range(3, 9):
        assert spanning_tree_count(cycle_graph(n)) == n
    assert spanning_tree_count(path_graph(7)) == 1
    assert spanning_tree_count(build_graph(1, [])) == 1
    assert spanning_tree_count(build_graph(0, [])) == 1
    assert spanning_tree_count(build_graph(4, [(0, 1), (2, 3)])) == 0
    assert spanning_tree_count(build_graph(2, [])) == 0


def _numpy_tree_count(g) -> int:
    L = nx.laplacian_matrix(nx_graph(g)).toarray().astype(float)
    return round(np.linalg.det(L[:-1, :-1]))


def test_spanning_tree_matches_numpy_determinant():
    rng = random.Random(17)
    for _ in range(15):
        n = rng.randrange(3, 10)
        m = rng.randrange(n - 1, n * (n - 1) // 2 + 1)
        g = random_connected_graph(rng, n, m)
        assert spanning_tree_count(g) == _numpy_tree_count(g)


def test_tree_coefficient_identity(assorted_graphs):
    for g in assorted_graphs:
        if g.vertex_count < 2 or not is_connected(g) or g.edge_count > 20:
            continue
        p = connected_edge_cover_polynomial(g)
        assert p.coefficient(g.vertex_count - 1) == spanning_tree_count(g)
