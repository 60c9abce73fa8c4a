"""Core metric graph type: construction, distances, geodesics, serialization."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _oracles as orc
from _corpus import SMALL_NAMES, small
from gromovlab.graphs import (
    MetricGraph,
    cartesian_product,
    dump_json,
    graph_from_obj,
    graph_to_dot,
    graph_to_obj,
    load_graph,
    multi_source_distances,
    unwrap_payload,
)


def test_rejects_bad_vertex_counts():
    for bad in (0, -1, True, 2.5, "3"):
        with pytest.raises(ValueError):
            MetricGraph(bad, [])


def test_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        MetricGraph(3, [(0, 1), (1, 2), (2, 2)])


def test_rejects_parallel_edges_in_either_orientation():
    with pytest.raises(ValueError, match="parallel"):
        MetricGraph(3, [(0, 1), (1, 2), (1, 0)])


def test_rejects_weighted_edge_triples():
    with pytest.raises(ValueError, match="not a pair"):
        MetricGraph(2, [(0, 1, 3.0)])


def test_rejects_unknown_and_non_integer_vertices():
    with pytest.raises(ValueError, match="unknown vertex"):
        MetricGraph(2, [(0, 5)])
    with pytest.raises(ValueError, match="integer"):
        MetricGraph(2, [(0, True)])


def test_rejects_disconnected_input():
    with pytest.raises(ValueError, match="connected"):
        MetricGraph(4, [(0, 1), (2, 3)])


def test_single_vertex_graph_is_fine():
    g = MetricGraph(1, [])
    assert g.n == 1
    assert g.shortest_distance(0, 0) == 0
    assert g.geodesic(0, 0) == [0]


def test_edges_are_normalized_and_sorted():
    g = MetricGraph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.neighbors(1) == (0, 2)
    assert g.degree(1) == 2


def test_labels_are_kept_and_coerced_to_str():
    g = MetricGraph(2, [(0, 1)], labels={0: 7})
    assert g.label(0) == "7"
    assert g.label(1) is None
    with pytest.raises(ValueError):
        MetricGraph(2, [(0, 1)], labels={5: "x"})


def test_graphs_are_unhashable_value_types():
    g = MetricGraph(2, [(0, 1)])
    h = MetricGraph(2, [(0, 1)])
    assert g == h
    with pytest.raises(TypeError):
        hash(g)


@pytest.mark.parametrize("name", ["grid-8-8", "farey-5", "rings-1-1-12"])
def test_distances_match_networkx(name):
    g = small(name)
    D = orc.distance_matrix(g)
    assert np.array_equal(g.distance_matrix(), D)
    for u in (0, g.n // 2, g.n - 1):
        assert np.array_equal(g.distances_from(u), D[u])


def test_distance_matrix_is_symmetric_with_zero_diagonal():
    g = small("grid-4-4")
    D = g.distance_matrix()
    assert np.array_equal(D, D.T)
    assert (np.diag(D) == 0).all()


@pytest.mark.parametrize("name", SMALL_NAMES)
def test_geodesics_are_valid_and_deterministic(name):
    g = small(name)
    pairs = [(0, g.n - 1), (g.n // 3, g.n // 2), (g.n - 1, 0)]
    for u, v in pairs:
        walk = g.geodesic(u, v)
        assert walk[0] == u and walk[-1] == v
        assert len(walk) - 1 == g.shortest_distance(u, v)
        for a, b in zip(walk, walk[1:]):
            assert b in g.neighbors(a)
        assert walk == g.geodesic(u, v)


def test_ball_matches_direct_scan():
    g = small("grid-8-8")
    D = orc.distance_matrix(g)
    for v, r in ((0, 0), (27, 3), (63, 100)):
        expected = sorted(int(w) for w in range(g.n) if D[v][w] <= r)
        assert g.ball(v, r) == expected


def test_induced_subgraph_keeps_internal_edges_only():
    g = small("grid-4-4")
    keep = [0, 1, 2, 4, 5]
    sub, old_to_new = g.induced(keep)
    assert sub.n == len(keep)
    assert sorted(old_to_new) == keep
    back = {i: v for v, i in old_to_new.items()}
    sub_edges = {tuple(sorted((back[a], back[b]))) for a, b in sub.edges}
    expect = {e for e in g.edges if e[0] in keep and e[1] in keep}
    assert sub_edges == expect


def test_induced_rejects_disconnected_subsets():
    g = small("path-50")
    assert not g.is_connected_subset([0, 1, 10])
    assert g.is_connected_subset([3, 4, 5])
    with pytest.raises(ValueError):
        g.induced([0, 1, 10])


def test_multi_source_distance_is_min_over_rows():
    g = small("grid-8-8")
    sources = [0, 63, 12]
    got = multi_source_distances(g, sources)
    expect = np.min([g.distances_from(s) for s in sources], axis=0)
    assert np.array_equal(got, expect)
    with pytest.raises(ValueError):
        multi_source_distances(g, [])


def test_cartesian_product_adds_coordinates():
    gx = small("cycle-8")
    gy = small("path-50")
    prod = cartesian_product(gx, gy)
    assert prod.n == gx.n * gy.n
    assert len(prod.edges) == gx.n * len(gy.edges) + gy.n * len(gx.edges)
    # product metric is the sum of coordinate metrics
    rng = np.random.default_rng(5)
    for _ in range(25):
        x1, x2 = rng.integers(gx.n, size=2)
        y1, y2 = rng.integers(gy.n, size=2)
        d = prod.shortest_distance(int(x1) * gy.n + int(y1), int(x2) * gy.n + int(y2))
        assert d == gx.shortest_distance(int(x1), int(x2)) + gy.shortest_distance(int(y1), int(y2))


def test_json_round_trip_preserves_equality_and_bytes(tmp_path):
    g = small("farey-4")
    obj = graph_to_obj(g)
    assert graph_from_obj(obj) == g
    payload = dump_json(obj)
    assert payload == dump_json(graph_to_obj(graph_from_obj(json.loads(payload))))
    target = tmp_path / "g.json"
    target.write_text(payload, encoding="utf-8")
    assert load_graph(target) == g


def test_unwrap_payload_handles_wrapped_and_raw():
    raw = {"n": 2, "edges": [[0, 1]]}
    assert unwrap_payload(raw) == raw
    assert unwrap_payload({"manifest": {}, "data": raw}) == raw


def test_dot_export_lists_vertices_and_edges():
    g = MetricGraph(3, [(0, 1), (1, 2)], labels={0: "start"})
    dot = graph_to_dot(g)
    assert "0 -- 1" in dot and "1 -- 2" in dot
    assert "start" in dot


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=12))
    # random spanning tree first, then optional extra edges
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return MetricGraph(n, sorted(edges))


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_metric_axioms_hold_on_random_graphs(g):
    D = g.distance_matrix()
    assert (np.diag(D) == 0).all()
    assert np.array_equal(D, D.T)
    # triangle inequality via one intermediate broadcast
    n = g.n
    for k in range(n):
        assert (D <= D[:, k : k + 1] + D[k : k + 1, :]).all()
    assert np.array_equal(D, orc.distance_matrix(g))
