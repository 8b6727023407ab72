"""Brick decomposition of bicritical graphs at 2-separations.

Each node of the tree is a :class:`LabeledGraph`: a graph, a map from its
local vertices to vertices of the input graph, and the set of marker edges.
Splitting at a 2-separation ``{u, v}`` adds ``uv`` to both sides (or keeps it
when already present) and flags it as a marker on both sides.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .canon import canonical_form
from .criticality import NotBicriticalError, is_bicritical, two_separations
from .graph import Edge, Graph, GraphError, bits, components, from_edge_list, is_k_connected


class SplitError(GraphError):
    pass


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    origin: tuple[int, ...]
    markers: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if len(self.origin) != self.graph.order:
            raise ValueError("origin map must cover every vertex")
        for u, v in self.markers:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"marker {(u, v)} is not an edge")

    @classmethod
    def root(cls, g: Graph) -> "LabeledGraph":
        return cls(g, tuple(range(g.order)))

    @property
    def marker_count(self) -> int:
        return len(self.markers)

    def to_original(self, e: Edge) -> Edge:
        return _e(self.origin[e[0]], self.origin[e[1]])

    def original_edges(self) -> set[Edge]:
        return {self.to_original(e) for e in self.graph.edges()}

    def original_markers(self) -> set[Edge]:
        return {self.to_original(e) for e in self.markers}

    def local(self, original_vertex: int) -> int:
        return self.origin.index(original_vertex)


def split_at(node: LabeledGraph, cut: Sequence[int]) -> tuple[LabeledGraph, LabeledGraph]:
    """Split ``node`` at the 2-separation ``cut`` (local indices).

    The component holding the lowest original vertex forms the first side on
    its own; all other components form the second side.
    """
    g = node.graph
    u, v = sorted(cut)
    if len(set(cut)) != 2 or not (0 <= u < g.order and 0 <= v < g.order):
        raise SplitError(f"cut must be two distinct vertices, got {tuple(cut)}")
    comps = components(g, 1 << u | 1 << v)
    if len(comps) < 2:
        raise SplitError(f"{(u, v)} does not disconnect the graph")
    odd = sum(1 for c in comps if c.bit_count() & 1)
    if odd == 2:
        raise SplitError(f"{(u, v)} is a barrier, not a 2-separation")

    def low(c):
        return min(node.origin[x] for x in bits(c))

    comps.sort(key=low)
    first = comps[0]
    second = 0
    for c in comps[1:]:
        second |= c
    return _side(node, first, u, v), _side(node, second, u, v)


def _side(node: LabeledGraph, group: int, u: int, v: int) -> LabeledGraph:
    g = node.graph
    keep = group | 1 << u | 1 << v
    verts = sorted(bits(keep), key=lambda x: node.origin[x])
    if len(verts) <= 2:
        raise SplitError("a side would have at most two vertices")
    index = {x: i for i, x in enumerate(verts)}
    edges = [(index[a], index[b]) for a, b in g.edges() if keep >> a & 1 and keep >> b & 1]
    lu, lv = index[u], index[v]
    edges.append((lu, lv))
    child = from_edge_list(len(verts), edges)
    markers = {_e(index[a], index[b]) for a, b in node.markers if keep >> a & 1 and keep >> b & 1}
    markers.add(_e(lu, lv))
    return LabeledGraph(child, tuple(node.origin[x] for x in verts), frozenset(markers))


@dataclass(frozen=True)
class SeparationPolicy:
    """Which 2-separation to split at: ``lexicographic`` or ``random``."""

    strategy: str = "lexicographic"
    seed: int | None = None

    def __post_init__(self):
        if self.strategy not in ("lexicographic", "random"):
            raise ValueError(f"unknown policy {self.strategy!r}")
        if (self.strategy == "random") != (self.seed is not None):
            raise ValueError("seed is required iff the policy is random")

    @classmethod
    def lexicographic(cls) -> "SeparationPolicy":
        return cls()

    @classmethod
    def seeded(cls, seed: int) -> "SeparationPolicy":
        return cls("random", seed)

    def __str__(self) -> str:
        return "lex" if self.strategy == "lexicographic" else f"random:{self.seed}"


@dataclass
class TreeNode:
    labeled: LabeledGraph
    children: tuple[int, ...] = ()
    split: Edge | None = None  # original indices

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class DecompositionTree:
    nodes: list[TreeNode] = field(default_factory=list)
    policy: SeparationPolicy = field(default_factory=SeparationPolicy)

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def leaves(self) -> list[TreeNode]:
        return [t for t in self.nodes if t.is_leaf]

    def internal(self) -> list[TreeNode]:
        return [t for t in self.nodes if not t.is_leaf]


def brick_decomposition(g: Graph, policy: SeparationPolicy | None = None) -> DecompositionTree:
    if not is_bicritical(g):
        raise NotBicriticalError("brick decomposition requires a bicritical graph")
    policy = policy or SeparationPolicy()
    rng = random.Random(policy.seed) if policy.strategy == "random" else None
    tree = DecompositionTree(policy=policy)
    tree.nodes.append(TreeNode(LabeledGraph.root(g)))
    stack = [0]
    while stack:
        idx = stack.pop()
        node = tree.nodes[idx]
        lg = node.labeled
        if is_k_connected(lg.graph, 3):
            continue
        seps = two_separations(lg.graph)
        if not seps:
            raise AssertionError("non-3-connected bicritical node without a 2-separation")
        seps.sort(key=lambda s: tuple(sorted(lg.origin[x] for x in s)))
        cut = seps[0] if rng is None else seps[rng.randrange(len(seps))]
        left, right = split_at(lg, cut)
        assert left.graph.order < lg.graph.order and right.graph.order < lg.graph.order
        a = len(tree.nodes)
        tree.nodes.append(TreeNode(left))
        tree.nodes.append(TreeNode(right))
        node.children = (a, a + 1)
        node.split = _e(lg.origin[cut[0]], lg.origin[cut[1]])
        # right first onto the stack so the left subtree is expanded first
        stack.append(a + 1)
        stack.append(a)
    return tree


def tree_counts(t: DecompositionTree) -> tuple[int, int, int]:
    """``(splits, bricks, marker edges summed over bricks)``."""
    leaves = t.leaves()
    return len(t.nodes) - len(leaves), len(leaves), sum(x.labeled.marker_count for x in leaves)


def brick_multiset(t: DecompositionTree) -> tuple[str, ...]:
    """Sorted canonical codes of the bricks; markers count as ordinary edges."""
    return tuple(sorted(canonical_form(x.labeled.graph) for x in t.leaves()))


def glue(
    h1: Graph, pair1: Sequence[int], h2: Graph, pair2: Sequence[int], with_edge: bool = False
) -> Graph:
    """Identify ``pair1`` of ``h1`` with ``pair2`` of ``h2``.

    Vertices of ``h1`` keep their indices; the rest of ``h2`` follows in
    order.  The identified pair is adjacent in the result iff it is adjacent
    in either part or ``with_edge`` is set.
    """
    a1, b1 = pair1
    a2, b2 = pair2
    n1 = h1.order
    index = {a2: a1, b2: b1}
    nxt = n1
    for x in range(h2.order):
        if x not in index:
            index[x] = nxt
            nxt += 1
    edges = list(h1.edges()) + [(index[x], index[y]) for x, y in h2.edges()]
    if with_edge:
        edges.append((a1, b1))
    return from_edge_list(nxt, edges)


# ---------------------------------------------------------------------------
# DOT output


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def tree_to_dot(t: DecompositionTree, with_nodes: bool = True) -> str:
    """Render the tree; optionally append one cluster per node showing its
    graph with marker edges in bold."""
    lines = ["digraph decomposition {", "  node [shape=box];"]
    for i, node in enumerate(t.nodes):
        if node.is_leaf:
            label = f"{_dot_escape(canonical_form(node.labeled.graph))}\\nmarkers={node.labeled.marker_count}"
            lines.append(f'  t{i} [label="{label}", shape=ellipse];')
        else:
            a, b = node.split
            lines.append(f'  t{i} [label="split {{{a},{b}}}"];')
    for i, node in enumerate(t.nodes):
        for c in node.children:
            lines.append(f"  t{i} -> t{c};")
    if with_nodes:
        for i, node in enumerate(t.nodes):
            lines.extend("  " + ln for ln in _node_cluster(i, node.labeled))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_cluster(i: int, lg: LabeledGraph) -> list[str]:
    out = [f"subgraph cluster_{i} {{", f'  label="node t{i}";', "  edge [dir=none];"]
    for x, o in enumerate(lg.origin):
        out.append(f'  n{i}_{x} [label="{o}", shape=circle];')
    for a, b in lg.graph.edges():
        style = ' [style=bold, penwidth=3]' if (a, b) in lg.markers else ""
        out.append(f"  n{i}_{a} -> n{i}_{b}{style};")
    out.append("}")
    return out


def labeled_graph_to_dot(lg: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for x, o in enumerate(lg.origin):
        lines.append(f'  {x} [label="{o}"];')
    for a, b in lg.graph.edges():
        style = " [style=bold]" if (a, b) in lg.markers else ""
        lines.append(f"  {a} -- {b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "DecompositionTree",
    "LabeledGraph",
    "SeparationPolicy",
    "SplitError",
    "TreeNode",
    "brick_decomposition",
    "brick_multiset",
    "glue",
    "labeled_graph_to_dot",
    "split_at",
    "tree_counts",
    "tree_to_dot",
]
