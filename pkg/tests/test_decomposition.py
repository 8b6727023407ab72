import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicrit import generators as gen
from bicrit.canon import canonical_form, is_isomorphic
from bicrit.codecs import parse_graph6
from bicrit.criticality import NotBicriticalError, deletable_edges, is_bicritical, two_separations
from bicrit.decomposition import (
    LabeledGraph,
    SeparationPolicy,
    SplitError,
    brick_decomposition,
    brick_multiset,
    glue,
    labeled_graph_to_dot,
    split_at,
    tree_counts,
    tree_to_dot,
)
from bicrit.enumeration import connected_codes
from bicrit.graph import is_k_connected

K4 = canonical_form(gen.complete(4))


def _bicritical(n):
    for code in connected_codes(n):
        g = parse_graph6(code)
        if g.min_degree() >= 3 and is_bicritical(g):
            yield g


# --- split_at ---------------------------------------------------------------


def test_split_d4(d4):
    left, right = split_at(LabeledGraph.root(d4), (0, 1))
    for side in (left, right):
        assert canonical_form(side.graph) == K4
        assert side.original_markers() == {(0, 1)}
    assert left.origin == (0, 1, 2, 3)
    assert right.origin == (0, 1, 4, 5)


def test_split_t8_groups_first_component_alone(t8):
    left, right = split_at(LabeledGraph.root(t8), (0, 1))
    assert canonical_form(left.graph) == K4
    assert left.marker_count == 1
    assert right.graph.order == 6
    # the rest is D4 with the edge uv present
    assert is_isomorphic(right.graph, gen.double_k4().with_edge(0, 1))
    assert right.original_markers() == {(0, 1)}


def test_split_rejects_barrier_and_non_cut(c4, k4):
    with pytest.raises(SplitError, match="barrier"):
        split_at(LabeledGraph.root(c4), (0, 2))
    with pytest.raises(SplitError, match="disconnect"):
        split_at(LabeledGraph.root(k4), (0, 1))
    with pytest.raises(SplitError):
        split_at(LabeledGraph.root(k4), (0, 0))


def test_labeled_graph_validates(k4):
    with pytest.raises(ValueError):
        LabeledGraph(k4, (0, 1, 2))
    with pytest.raises(ValueError):
        LabeledGraph(k4.without_edge(0, 1), (0, 1, 2, 3), frozenset({(0, 1)}))


# --- policies ---------------------------------------------------------------


def test_policy_seed_rules():
    assert str(SeparationPolicy.lexicographic()) == "lex"
    assert str(SeparationPolicy.seeded(4)) == "random:4"
    with pytest.raises(ValueError):
        SeparationPolicy("random")
    with pytest.raises(ValueError):
        SeparationPolicy("lexicographic", 3)
    with pytest.raises(ValueError):
        SeparationPolicy("greedy")


# --- brick decomposition -----------------------------------------------------


def test_k4_tree(k4):
    t = brick_decomposition(k4)
    assert tree_counts(t) == (0, 1, 0)
    assert brick_multiset(t) == (K4,)


def test_d4_tree(d4):
    t = brick_decomposition(d4)
    assert tree_counts(t) == (1, 2, 2)
    assert [x.labeled.marker_count for x in t.leaves()] == [1, 1]
    assert brick_multiset(t) == (K4, K4)
    assert t.root.split == (0, 1)


def test_t8_tree(t8):
    t = brick_decomposition(t8)
    assert tree_counts(t) == (2, 3, 3)
    assert [x.labeled.marker_count for x in t.leaves()] == [1, 1, 1]
    # the second split reuses {u, v}; the old marker is a marker on both sides
    assert [x.split for x in t.internal()] == [(0, 1), (0, 1)]
    for seed in range(10):
        assert brick_multiset(brick_decomposition(t8, SeparationPolicy.seeded(seed))) == (K4,) * 3


def test_d4_same_under_any_policy(d4):
    for seed in range(5):
        assert brick_multiset(brick_decomposition(d4, SeparationPolicy.seeded(seed))) == (K4, K4)


def test_decomposition_requires_bicritical(c6):
    with pytest.raises(NotBicriticalError):
        brick_decomposition(c6)


def test_adjacent_separation_is_split():
    # octahedron glued to K4 along an edge: the cut pair stays adjacent
    g = glue(gen.octahedron(), (0, 2), gen.complete(4), (0, 1))
    assert g.has_edge(0, 2) and two_separations(g) == [(0, 2)]
    t = brick_decomposition(g)
    assert tree_counts(t) == (1, 2, 2)
    assert sorted(brick_multiset(t)) == sorted([K4, canonical_form(gen.octahedron())])


def test_random_policy_is_reproducible(t8):
    a = brick_decomposition(t8, SeparationPolicy.seeded(3))
    b = brick_decomposition(t8, SeparationPolicy.seeded(3))
    assert [x.split for x in a.nodes] == [x.split for x in b.nodes]


@pytest.mark.parametrize("n", [4, 6])
def test_tree_invariants_on_census(n):
    for g in _bicritical(n):
        root_edges = set(g.edges())
        for policy in [SeparationPolicy()] + [SeparationPolicy.seeded(s) for s in range(3)]:
            t = brick_decomposition(g, policy)
            s, b, markers = tree_counts(t)
            assert s == b - 1
            assert markers <= 2 * s
            for leaf in t.leaves():
                assert is_k_connected(leaf.labeled.graph, 3)
                assert is_bicritical(leaf.labeled.graph)
            for node in t.nodes:
                lg = node.labeled
                plain = {lg.to_original(e) for e in lg.graph.edges() if e not in lg.markers}
                assert plain <= root_edges


def test_theorem_children_bicritical_order_8():
    for g in _bicritical(8):
        for sep in two_separations(g):
            for side in split_at(LabeledGraph.root(g), sep):
                assert is_bicritical(side.graph)


# --- gluing -------------------------------------------------------------------


def test_glue_two_k4_minus_edge_is_d4(d4):
    h = gen.complete(4).without_edge(0, 1)
    g = glue(h, (0, 1), h, (0, 1))
    assert g == d4
    assert glue(h, (0, 1), h, (0, 1), with_edge=True) == d4.with_edge(0, 1)


def test_glue_minimal_halves_is_minimal():
    k4 = gen.complete(4)
    g = glue(k4.without_edge(0, 1), (0, 1), k4.without_edge(2, 3), (2, 3))
    assert is_bicritical(g) and not deletable_edges(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.data())
def test_stacked_k4_round_trip(copies, data):
    g = gen.stacked_k4(copies)
    seed = data.draw(st.integers(0, 1000))
    t = brick_decomposition(g, SeparationPolicy.seeded(seed))
    # every leaf is a K4 carrying the single marker uv
    assert tree_counts(t) == (copies - 1, copies, copies)
    assert brick_multiset(t) == (K4,) * copies


# --- DOT ----------------------------------------------------------------------


def test_tree_dot(d4):
    dot = tree_to_dot(brick_decomposition(d4))
    assert dot.startswith("digraph decomposition {")
    assert 'label="split {0,1}"' in dot
    assert dot.count("markers=1") == 2
    assert "penwidth=3" in dot
    assert dot.rstrip().endswith("}")
    bare = tree_to_dot(brick_decomposition(d4), with_nodes=False)
    assert "cluster" not in bare and bare.count("->") == 2


def test_labeled_graph_dot(d4):
    left, _ = split_at(LabeledGraph.root(d4), (0, 1))
    dot = labeled_graph_to_dot(left)
    assert dot.count("--") == 6
    assert "[style=bold]" in dot
