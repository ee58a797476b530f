from __future__ import annotations

import pytest

from semistrong import families
from semistrong.graph import (
    GraphError,
    bfs_edge_order,
    build_graph,
    connected_components,
    g_family_witness,
    is_complete_bipartite_dd,
    max_degree,
)


def test_build_c4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.vertex_count == 4
    assert g.edge_count == 4
    assert g.edges[3] == (3, 0)
    assert g.degree(0) == 2
    assert g.edge_between(0, 3) == 3
    assert g.edge_between(3, 0) == 3


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.edge_count == 0
    assert max_degree(g) == 0


@pytest.mark.parametrize(
    "n,pairs,reason",
    [
        (3, [(0, 1), (0, 1)], "duplicate_edge"),
        (3, [(0, 1), (1, 0)], "duplicate_edge"),
        (2, [(0, 0)], "self_loop"),
        (2, [(0, 2)], "endpoint_out_of_range"),
        (2, [(-1, 0)], "endpoint_out_of_range"),
    ],
)
def test_build_rejections(n, pairs, reason):
    with pytest.raises(GraphError) as exc:
        build_graph(n, pairs)
    assert exc.value.reason == reason


def test_adjacency_consistency():
    for g in [families.prism(5), families.hypercube(3), families.c7_blowup()]:
        counts = [0] * g.edge_count
        for v in range(g.vertex_count):
            assert g.degree(v) == len(g.adjacency[v])
            for w, e in g.adjacency[v]:
                assert v in g.edges[e] and w in g.edges[e]
                counts[e] += 1
        assert all(c == 2 for c in counts)
        assert sum(g.degree(v) for v in range(g.vertex_count)) == 2 * g.edge_count


def test_max_degree_values():
    assert max_degree(families.cycle(4)) == 2
    assert max_degree(families.complete_bipartite(3, 3)) == 3
    assert max_degree(families.h_graph(3)) == 3


def test_components_single():
    views = connected_components(families.cycle(4))
    assert len(views) == 1
    assert views[0].vertex_map == (0, 1, 2, 3)
    assert views[0].edge_map == (0, 1, 2, 3)


def test_components_disjoint_union():
    c4 = families.cycle(4)
    c5 = families.cycle(5)
    pairs = list(c4.edges) + [(u + 4, v + 4) for u, v in c5.edges]
    g = build_graph(9, pairs)
    views = connected_components(g)
    assert len(views) == 2
    assert views[0].graph.vertex_count == 4
    assert views[1].graph.vertex_count == 5
    # edge endpoints map consistently
    for view in views:
        for le, pe in enumerate(view.edge_map):
            lu, lv = view.graph.edges[le]
            assert {view.vertex_map[lu], view.vertex_map[lv]} == set(g.edges[pe])


def test_components_edgeless():
    g = build_graph(3, [])
    assert len(connected_components(g)) == 3


def test_complete_bipartite_recognition():
    assert is_complete_bipartite_dd(families.complete_bipartite(3, 3), 3)
    assert not is_complete_bipartite_dd(families.prism(3), 3)
    assert is_complete_bipartite_dd(families.cycle(4), 2)
    assert not is_complete_bipartite_dd(families.complete_bipartite(2, 3), 2)
    assert not is_complete_bipartite_dd(families.complete_bipartite(3, 3), 2)


def test_complete_bipartite_rejects_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError) as exc:
        is_complete_bipartite_dd(g, 1)
    assert exc.value.reason == "disconnected"


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def test_g_family_witness_k33():
    g = families.complete_bipartite(3, 3)
    w = g_family_witness(g)
    assert w is not None
    # every edge qualifies, so the smallest index is returned
    assert w == 0


def test_g_family_witness_prism3():
    g = families.prism(3)
    w = g_family_witness(g)
    assert w is not None
    # verify by direct adjacency enumeration
    u, v = g.edges[w]
    assert set(g.neighbors(u)) | set(g.neighbors(v)) == set(range(6))


def test_g_family_witness_petersen_none():
    g = petersen()
    # 3-regular on 10 vertices: not d-regular for d = n/2, so no witness
    assert g_family_witness(g) is None
    # confirm by enumerating all edges anyway
    for u, v in g.edges:
        assert len(set(g.neighbors(u)) | set(g.neighbors(v))) < 10


def test_g_family_witness_prisms():
    assert g_family_witness(families.prism(3)) is not None
    for n in range(4, 8):
        assert g_family_witness(families.prism(n)) is None


def test_kdd_implies_witness():
    for d in range(1, 5):
        assert g_family_witness(families.complete_bipartite(d, d)) is not None


def test_bfs_edge_order_covers_all():
    for g in [families.prism(4), build_graph(5, [(0, 1), (3, 4)])]:
        order = bfs_edge_order(g)
        assert sorted(order) == list(range(g.edge_count))
