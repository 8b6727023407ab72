"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Adjacency of vertex ``v`` is an ``int`` whose bit ``w`` is set iff ``vw`` is
an edge.  All set-valued results (vertex sets, edge lists) are returned in
ascending order so golden outputs are stable.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Raised for malformed graph input."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Ascending list of the set bit positions of ``mask``."""
    return list(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph.

    Instances are immutable and hashable; equality is labelled equality
    (same order, same edge set), not isomorphism.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        self._n = n
        self._adj = tuple(adj)
        self._hash = None

    @property
    def order(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    @property
    def size(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return bits(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        out = []
        for u, a in enumerate(self._adj):
            for v in _bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self._n, u, v)
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self._n, adj)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge {(u, v)} not in graph")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self._n, adj)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            for w in _bits(self._adj[v]):
                j = index.get(w)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph(len(vs), adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self._n
        for v, a in enumerate(self._adj):
            pv = perm[v]
            m = 0
            for w in _bits(a):
                m |= 1 << perm[w]
            adj[pv] = m
        return Graph(self._n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"endpoint out of range in edge {(u, v)} for order {n}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise GraphError("order must be non-negative")
    adj = [0] * n
    for e in edges:
        u, v = e
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# connectivity


def components(g: Graph, removed: int = 0) -> list[int]:
    """Vertex masks of the connected components of ``g`` minus ``removed``."""
    adj = g.adjacency
    remaining = g.full_mask & ~removed
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt = adj[low.bit_length() - 1] & remaining & ~comp
            comp |= nxt
            frontier |= nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph, removed: int = 0) -> bool:
    return len(components(g, removed)) <= 1


def odd_component_count(g: Graph, s: Iterable[int] = ()) -> int:
    """Number of odd components of ``g - s``."""
    removed = mask_of(s)
    return sum(1 for c in components(g, removed) if c.bit_count() & 1)


def vertex_cuts(g: Graph, size: int) -> list[VertexSet]:
    """All ``size``-subsets whose deletion disconnects ``g``, lexicographic."""
    if not is_connected(g):
        raise GraphError("vertex_cuts requires a connected graph")
    if not 0 <= size < g.order:
        raise GraphError(f"cut size {size} out of range for order {g.order}")
    return [
        s
        for s in combinations(range(g.order), size)
        if len(components(g, mask_of(s))) > 1
    ]


def cut_vertices(g: Graph) -> VertexSet:
    return tuple(s[0] for s in vertex_cuts(g, 1)) if g.order > 1 else ()


def is_k_connected(g: Graph, k: int) -> bool:
    if g.order <= k:
        return False
    if not is_connected(g):
        return False
    for size in range(1, k):
        for s in combinations(range(g.order), size):
            if len(components(g, mask_of(s))) > 1:
                return False
    return True


def cubic_vertices(g: Graph) -> VertexSet:
    return tuple(v for v, a in enumerate(g.adjacency) if a.bit_count() == 3)


# ---------------------------------------------------------------------------
# structural subgraph tests


def find_k33(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Two disjoint triples with all nine cross edges, or ``None``."""
    adj = g.adjacency
    for a in combinations(range(g.order), 3):
        common = adj[a[0]] & adj[a[1]] & adj[a[2]]
        if common.bit_count() >= 3:
            return a, tuple(bits(common)[:3])
    return None


def contains_k33(g: Graph) -> bool:
    return find_k33(g) is not None


def _cycle_in(adj: Sequence[int], within: int) -> list[int] | None:
    # DFS over the subgraph induced on ``within``; returns a cycle if any.
    parent: dict[int, int] = {}
    for root in _bits(within):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for y in _bits(adj[x] & within):
                if y == parent[x]:
                    continue
                if y in parent:
                    # y is visited and not the tree parent: walk both to the LCA
                    px, py = [x], [y]
                    while px[-1] != -1:
                        px.append(parent[px[-1]])
                    while py[-1] != -1:
                        py.append(parent[py[-1]])
                    sx = set(px)
                    lca = next(z for z in py if z in sx)
                    left = px[: px.index(lca) + 1]
                    right = py[: py.index(lca)]
                    return left + right[::-1]
                parent[y] = x
                stack.append(y)
    return None


def find_wheel(g: Graph) -> tuple[int, list[int]] | None:
    """A hub and a rim cycle inside its neighbourhood, or ``None``."""
    adj = g.adjacency
    for v in range(g.order):
        cyc = _cycle_in(adj, adj[v])
        if cyc is not None:
            return v, cyc
    return None


def is_wheel(g: Graph) -> bool:
    n = g.order
    if n < 4:
        return False
    full = g.full_mask
    for hub in range(n):
        if g.adjacency[hub] != full & ~(1 << hub):
            continue
        rim = full & ~(1 << hub)
        if all((g.adjacency[w] & rim).bit_count() == 2 for w in _bits(rim)) and (
            len(components(g, 1 << hub)) == 1
        ):
            return True
    return False


def contains_wheel(g: Graph) -> tuple[bool, bool]:
    """``(contains some wheel as a subgraph, is itself a wheel)``."""
    return find_wheel(g) is not None, is_wheel(g)
