import networkx as nx
import pytest

from conftest import nx_graph
from ecpoly import (
    BadParameters,
    FamilySpec,
    SizeCapExceeded,
    canonicalize,
    circular_ladder_graph,
    complete_bipartite_graph,
    complete_graph,
    corona_k1,
    cycle_graph,
    enumerate_connected_graphs,
    enumerate_connected_regular,
    friendship_graph,
    is_connected,
    is_isomorphic,
    make_family,
    parse_family_text,
    path_graph,
    petersen_graph,
    write_graph6,
)


def test_path_and_cycle():
    assert path_graph(1).edge_count == 0
    assert path_graph(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert cycle_graph(3).edge_count == 3
    assert cycle_graph(6).degrees == (2,) * 6
    with pytest.raises(BadParameters):
        path_graph(0)
    with pytest.raises(BadParameters):
        cycle_graph(2)


def test_complete_and_bipartite():
    assert complete_graph(1).edge_count == 0
    assert complete_graph(5).edge_count == 10
    assert complete_bipartite_graph(3, 3).degrees == (3,) * 6
    assert complete_bipartite_graph(1, 3).degrees == (3, 1, 1, 1)
    with pytest.raises(BadParameters):
        complete_bipartite_graph(0, 2)


def test_friendship_shape():
    # n cycles of length m glued at one hub: 1 + n(m-1) vertices, n*m edges
    for n, m in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (2, 5)]:
        g = friendship_graph(n, m)
        assert g.vertex_count == 1 + n * (m - 1)
        assert g.edge_count == n * m
        assert g.degrees[0] == 2 * n
        assert all(d == 2 for d in g.degrees[1:])
        assert is_connected(g)
    assert is_isomorphic(friendship_graph(1, 3), cycle_graph(3))
    assert is_isomorphic(friendship_graph(1, 5), cycle_graph(5))
    with pytest.raises(BadParameters):
        friendship_graph(0, 3)
    with pytest.raises(BadParameters):
        friendship_graph(1, 2)


def test_corona_k1_shape():
    base = cycle_graph(4)
    g = corona_k1(base)
    assert g.vertex_count == 8
    assert g.edge_count == 8
    assert sorted(g.degrees) == [1, 1, 1, 1, 3, 3, 3, 3]
    assert is_connected(g)


def test_petersen():
    g = petersen_graph()
    assert g.vertex_count == 10
    assert g.edge_count == 15
    assert g.degrees == (3,) * 10
    assert nx.is_isomorphic(nx_graph(g), nx.petersen_graph())


def test_circular_ladder():
    g = circular_ladder_graph(3)
    assert g.vertex_count == 6
    assert g.degrees == (3,) * 6
    assert nx.is_isomorphic(nx_graph(g), nx.circular_ladder_graph(3))
    assert nx.is_isomorphic(nx_graph(circular_ladder_graph(5)), nx.circular_ladder_graph(5))
    with pytest.raises(BadParameters):
        circular_ladder_graph(2)


def test_make_family_validation():
    assert make_family(FamilySpec("path", (4,))).edge_count == 3
    with pytest.raises(BadParameters):
        make_family(FamilySpec("mystery", ()))
    with pytest.raises(BadParameters):
        make_family(FamilySpec("path", (3, 4)))
    with pytest.raises(BadParameters):
        make_family(FamilySpec("corona_k1"))
    with pytest.raises(BadParameters):
        make_family(FamilySpec("path", (3,), base=path_graph(2)))


@pytest.mark.parametrize(
    "text,expect",
    [
        ("P7", path_graph(7)),
        ("C9", cycle_graph(9)),
        ("K5", complete_graph(5)),
        ("Kb3,3", complete_bipartite_graph(3, 3)),
        ("F2,3", friendship_graph(2, 3)),
        ("petersen", petersen_graph()),
        ("prism3", circular_ladder_graph(3)),
        ("corona(K4)", corona_k1(complete_graph(4))),
        ("corona(corona(K3))", corona_k1(corona_k1(complete_graph(3)))),
    ],
)
def test_parse_family_text(text, expect):
    spec = parse_family_text(text)
    assert spec is not None
    assert make_family(spec) == expect


@pytest.mark.parametrize("text", ["", "P", "p7", "K3,3", "C4x", "corona()", "corona(X9)", "petersen2"])
def test_parse_family_text_rejects(text):
    assert parse_family_text(text) is None


# -- catalogs --------------------------------------------------------------


@pytest.mark.parametrize(
    "n,k,count",
    [
        (4, 3, 1),
        (6, 3, 2),
        (8, 3, 5),
        (10, 3, 19),
        (5, 4, 1),
        (7, 4, 2),
        (6, 2, 1),
        (8, 2, 1),
        (1, 0, 1),
        (2, 1, 1),
    ],
)
def test_regular_catalog_counts(n, k, count):
    catalog = enumerate_connected_regular(n, k)
    assert len(catalog) == count
    for g in catalog:
        assert g.vertex_count == n
        assert g.degrees == (k,) * n
        assert is_connected(g)
        # stored in canonical labeling, sorted by canonical string
        assert write_graph6(g) == canonicalize(g)
    strings = [write_graph6(g) for g in catalog]
    assert strings == sorted(strings)
    for i in range(len(catalog)):
        for j in range(i + 1, len(catalog)):
            assert not nx.is_isomorphic(nx_graph(catalog[i]), nx_graph(catalog[j]))


def test_regular_catalog_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        enumerate_connected_regular(4, 4)
    with pytest.raises(BadParameters):
        enumerate_connected_regular(5, 3)
    with pytest.raises(BadParameters):
        enumerate_connected_regular(0, 0)
    with pytest.raises(SizeCapExceeded):
        enumerate_connected_regular(14, 3)
    assert enumerate_connected_regular(3, 0) == ()


def test_cubic_catalogs_match_known_graphs():
    k4 = enumerate_connected_regular(4, 3)
    assert is_isomorphic(k4[0], complete_graph(4))
    order6 = enumerate_connected_regular(6, 3)
    assert any(is_isomorphic(g, complete_bipartite_graph(3, 3)) for g in order6)
    assert any(is_isomorphic(g, circular_ladder_graph(3)) for g in order6)


def test_connected_catalog_counts_match_atlas():
    # the graph atlas is an independent census for orders up to 7
    atlas = nx.graph_atlas_g()[1:]
    for n in range(1, 8):
        expected = sum(1 for G in atlas if len(G) == n and nx.is_connected(G))
        catalog = enumerate_connected_graphs(n)
        assert len(catalog) == expected
        for g in catalog:
            assert g.vertex_count == n
            assert is_connected(g)
            assert write_graph6(g) == canonicalize(g)
    assert [len(enumerate_connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_connected_catalog_caps():
    with pytest.raises(BadParameters):
        enumerate_connected_graphs(0)
    with pytest.raises(SizeCapExceeded):
        enumerate_connected_graphs(8)


def test_connected_catalog_pairwise_distinct():
    catalog = enumerate_connected_graphs(5)
    for i in range(len(catalog)):
        for j in range(i + 1, len(catalog)):
            assert not nx.is_isomorphic(nx_graph(catalog[i]), nx_graph(catalog[j]))
