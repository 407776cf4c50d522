from fractions import Fraction

import pytest

import reorient as ro


def bidirected(n):
    g = ro.MixedGraph(n)
    for u in range(n):
        for v in range(n):
            if u != v:
                g.add_arc(u, v)
    return g


def cycle(n, directed=False):
    g = ro.MixedGraph(n)
    for i in range(n):
        (g.add_arc if directed else g.add_edge)(i, (i + 1) % n)
    return g


def test_graph_round_trips_through_text():
    g = cycle(4)
    g.add_arc(0, 2)
    back = ro.MixedGraph.from_text(g.to_text())
    assert back == g
    assert back.edges() == [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert len(g.content_hash()) == 16


def test_connectivity_queries():
    assert ro.is_k_arc_strong(bidirected(3), 2)
    assert not ro.is_k_arc_strong(cycle(3, directed=True), 2)
    assert ro.edge_connectivity(cycle(5)) == 2


def test_min_reversals_on_a_path_like_digraph():
    g = ro.MixedGraph(3)
    g.add_arc(0, 1)
    g.add_arc(1, 2)
    g.add_arc(0, 2)
    res = ro.min_reversals(g, ro.Target.arc(1))
    assert res.feasible
    assert res.optimum == 1
    assert isinstance(res.optimum, Fraction)
    assert ro.is_strong(ro.reverse_arcs(g, res.witness))


def test_weighted_doubling_returns_fractions():
    res = ro.w23eda(cycle(5), weights=[Fraction(1, 2)] * 5)
    assert res.optimum == Fraction(2)


def test_vertex_cover_and_class_g():
    k4 = ro.MixedGraph(4)
    for u in range(4):
        for v in range(u + 1, 4):
            k4.add_edge(u, v)
    assert ro.vertex_cover(k4).optimum == 3
    assert ro.vertex_cover(ro.class_g_instance(k4)).optimum == 9


def test_sat_reduction_reaches_budget():
    clauses = [[1, 2], [1, -2], [-1, 2]]
    assert ro.max2sat(2, clauses).optimum == 3
    red = ro.reduce_s3b_to_3sdo(2, clauses, 3)
    d = red["graph"]
    assert d.num_vertices == 44
    assert red["budget"] == 12
    res = ro.min_deorientations(d, ro.Target.strong(3), budget=12)
    assert res.feasible and res.optimum == 12


def test_generators_are_seeded():
    assert ro.random_cactus(8, 3) == ro.random_cactus(8, 3)
    assert ro.is_cactus(ro.random_cactus(8, 3))
    assert len(ro.random_s3b_sat(4, 1)) == 6
    assert ro.build_rocket("out", 2).num_vertices == 11


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        ro.MixedGraph.from_text("e 0 0\n")
    with pytest.raises(ValueError):
        ro.build_rocket("sideways", 1)
