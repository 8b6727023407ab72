import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicrit import generators as gen
from bicrit.codecs import (
    Graph6Error,
    emit_edgelist,
    emit_graph6,
    iter_edgelists,
    parse_edgelist,
    parse_graph6,
    read_graphs,
)
from bicrit.enumeration import enumerate_graphs
from bicrit.graph import (
    GraphError,
    components,
    contains_k33,
    contains_wheel,
    cubic_vertices,
    cut_vertices,
    find_k33,
    find_wheel,
    from_edge_list,
    is_connected,
    is_k_connected,
    is_wheel,
    odd_component_count,
    vertex_cuts,
)

from conftest import atlas, graphs, to_nx


# --- construction ---------------------------------------------------------


def test_from_edge_list_k4(k4):
    g = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert g == k4
    assert g.size == 6 and g.degrees() == [3, 3, 3, 3]


def test_from_edge_list_c4(c4):
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g == c4
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        from_edge_list(2, [(0, 0)])


def test_out_of_range_endpoint_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.size == 1


def test_graph_is_immutable_value(k4):
    h = k4.without_edge(0, 1)
    assert k4.has_edge(0, 1) and not h.has_edge(0, 1)
    assert h.with_edge(0, 1) == k4
    assert hash(h.with_edge(0, 1)) == hash(k4)
    with pytest.raises(GraphError):
        h.without_edge(0, 1)


def test_induced_relabels_in_given_order(pete):
    h = pete.induced([5, 0, 1])
    assert h.edges() == [(0, 1), (1, 2)]


# --- graph6 ---------------------------------------------------------------


def test_parse_k4(k4):
    assert parse_graph6("C~") == k4


def test_emit_k4_and_single_vertex(k4):
    assert emit_graph6(k4) == "C~"
    assert emit_graph6(gen.empty(1)) == "@"


def test_parse_accepts_header_and_whitespace(k4):
    assert parse_graph6(">>graph6<<C~\n") == k4


@pytest.mark.parametrize("bad", ["C", "C~~", "", "C!", "~??"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_parse_rejects_nonzero_padding():
    # n=2 has one data bit; the remaining five must be zero
    assert parse_graph6("A_").size == 1
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("A`")


@pytest.mark.parametrize("name", ["petersen", "Q3", "octahedron", "T8"])
def test_codes_match_networkx(name):
    g = gen.NAMED[name]()
    text = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert emit_graph6(g) == text


def test_large_order_prefix():
    g = gen.path(70)
    code = emit_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g
    assert code == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_round_trip_exhaustive_to_order_8():
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_order=12))
def test_graph6_round_trip_random(g):
    assert parse_graph6(emit_graph6(g)) == g


# --- edge lists -----------------------------------------------------------


def test_edgelist_round_trip(pete):
    assert parse_edgelist(emit_edgelist(pete)) == pete


def test_edgelist_stream_skips_comments(k4, c4):
    text = "# two graphs\n" + emit_edgelist(k4) + "\n" + emit_edgelist(c4)
    assert list(iter_edgelists(text.splitlines())) == [k4, c4]


@pytest.mark.parametrize("bad", ["4", "4 2\n0 1", "3 1\n0 x", "2 1\n0 0"])
def test_edgelist_rejects_malformed(bad):
    with pytest.raises(GraphError):
        parse_edgelist(bad)


def test_read_graphs_formats(k4):
    assert list(read_graphs(["C~", ""], "g6")) == [k4]
    with pytest.raises(ValueError):
        list(read_graphs([], "dot"))


# --- degrees, components, cuts --------------------------------------------


def test_cubic_vertices(k4, c6, d4):
    assert cubic_vertices(k4) == (0, 1, 2, 3)
    assert cubic_vertices(c6) == ()
    # u=0 and v=1 are the cut vertices of degree 4
    assert cubic_vertices(d4) == (2, 3, 4, 5)


def test_odd_component_count(k4, c4, c6):
    assert odd_component_count(k4, [0]) == 1
    assert odd_component_count(c4, [0, 2]) == 2
    assert odd_component_count(c6, [0, 3]) == 0


def test_vertex_cuts(k4, c4, d4):
    assert vertex_cuts(c4, 2) == [(0, 2), (1, 3)]
    assert vertex_cuts(k4, 2) == []
    assert vertex_cuts(d4, 2) == [(0, 1)]


def test_vertex_cuts_disconnected_input():
    with pytest.raises(GraphError):
        vertex_cuts(gen.empty(3), 1)


def test_cut_vertices_and_connectivity(pete, d4):
    assert cut_vertices(gen.path(4)) == (1, 2)
    assert is_k_connected(pete, 3) and not is_k_connected(pete, 4)
    assert is_k_connected(d4, 2) and not is_k_connected(d4, 3)


@given(graphs())
def test_degree_sum_is_twice_size(g):
    assert sum(g.degrees()) == 2 * g.size


@given(graphs())
def test_odd_component_parity(g):
    assert odd_component_count(g, []) % 2 == g.order % 2


@given(graphs())
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in (
        [v for v in range(g.order) if m >> v & 1] for m in components(g)))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs
    assert is_connected(g) == (g.order == 0 or nx.is_connected(to_nx(g)))


def test_connectivity_matches_networkx():
    for g in atlas(6):
        h = to_nx(g)
        if g.order < 2 or not nx.is_connected(h):
            continue
        kappa = nx.node_connectivity(h)
        for k in (1, 2, 3):
            assert is_k_connected(g, k) == (kappa >= k and g.order > k), g


# --- K_{3,3} and wheels ---------------------------------------------------


def test_contains_k33():
    assert contains_k33(gen.complete_bipartite(3, 3))
    assert not contains_k33(gen.complete(4))
    assert not contains_k33(gen.cube())


def test_find_k33_witness_is_complete_bipartite():
    g = gen.complete(6)
    a, b = find_k33(g)
    assert len(set(a) | set(b)) == 6
    assert all(g.has_edge(x, y) for x in a for y in b)


def test_contains_wheel(k4, c6, pete):
    assert contains_wheel(k4) == (True, True)
    assert contains_wheel(c6) == (False, False)
    assert contains_wheel(pete) == (False, False)
    assert contains_wheel(gen.wheel(5)) == (True, True)
    assert contains_wheel(gen.complete(5)) == (True, False)


def test_find_wheel_witness(octa, d4):
    hub, rim = find_wheel(octa)
    assert len(rim) >= 3
    assert all(octa.has_edge(hub, r) for r in rim)
    assert all(octa.has_edge(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim)))
    # neighbourhoods in D4 are two disjoint edges
    assert find_wheel(d4) is None


def test_is_wheel_needs_connected_rim():
    # hub joined to two disjoint triangles: rim is 2-regular but disconnected
    edges = [(0, i) for i in range(1, 7)] + [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
    assert not is_wheel(from_edge_list(7, edges))
    assert is_wheel(gen.wheel(6))


def _wheel_by_forest_test(g):
    h = to_nx(g)
    return any(not nx.is_forest(h.subgraph(h[v])) for v in h if len(h[v]) > 0)


def test_wheel_equals_non_forest_neighbourhood_to_order_7():
    for g in atlas(7):
        assert contains_wheel(g)[0] == _wheel_by_forest_test(g), emit_graph6(g)


def test_k33_matches_networkx_subgraph_search_to_order_7():
    k33 = nx.complete_bipartite_graph(3, 3)
    for g in atlas(7):
        if g.order < 6:
            assert not contains_k33(g)
            continue
        gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), k33)
        assert contains_k33(g) == gm.subgraph_is_monomorphic(), emit_graph6(g)


@settings(max_examples=50)
@given(st.integers(4, 12))
def test_wheels_are_wheels(k):
    assert is_wheel(gen.wheel(k))
