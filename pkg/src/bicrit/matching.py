"""Maximum cardinality matching in general graphs (Edmonds' blossom method).

Vertices may be masked out with ``removed`` so that callers can ask about
``G - S`` without building a new graph.  Free vertices and neighbours are
scanned in ascending index order, which makes the output deterministic.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, GraphError, bits, is_connected


class NotMatchingCoveredError(GraphError):
    pass


def _neighbour_lists(g: Graph, alive: int) -> list[list[int]]:
    return [bits(a & alive) if alive >> v & 1 else [] for v, a in enumerate(g.adjacency)]


def _mates(g: Graph, removed: int = 0) -> list[int]:
    n = g.order
    alive = g.full_mask & ~removed
    adj = _neighbour_lists(g, alive)
    mate = [-1] * n

    # greedy start
    for v in range(n):
        if mate[v] == -1 and alive >> v & 1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    for root in range(n):
        if mate[root] != -1 or not alive >> root & 1 or not adj[root]:
            continue
        _augment_from(root, adj, mate, n)
    return mate


def _augment_from(root: int, adj: list[list[int]], mate: list[int], n: int) -> bool:
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    # flip the alternating path ending at ``to``
                    w = to
                    while w != -1:
                        pw = parent[w]
                        nxt = mate[pw]
                        mate[w], mate[pw] = pw, w
                        w = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching(g: Graph, removed: int = 0) -> frozenset[Edge]:
    """A maximum matching of ``g`` minus the vertices in mask ``removed``."""
    mate = _mates(g, removed)
    return frozenset((v, w) for v, w in enumerate(mate) if v < w)


def matching_number(g: Graph, removed: int = 0) -> int:
    return sum(1 for v, w in enumerate(_mates(g, removed)) if v < w)


def has_perfect_matching(g: Graph, removed: int = 0) -> bool:
    """True iff ``g - removed`` has a perfect matching."""
    alive = g.full_mask & ~removed
    cnt = alive.bit_count()
    if cnt & 1:
        return False
    adj = g.adjacency
    m = alive
    while m:
        low = m & -m
        if not adj[low.bit_length() - 1] & alive:
            return False
        m ^= low
    return 2 * matching_number(g, removed) == cnt


def is_matching(g: Graph, edges) -> bool:
    seen = 0
    for u, v in edges:
        if not g.has_edge(u, v) or seen >> u & 1 or seen >> v & 1:
            return False
        seen |= 1 << u | 1 << v
    return True


def is_matching_covered(g: Graph) -> bool:
    """Connected, at least two vertices, and every edge in a perfect matching."""
    n = g.order
    if n < 2 or n & 1 or not is_connected(g):
        return False
    return all(has_perfect_matching(g, 1 << u | 1 << v) for u, v in g.edges())


def removable_edges(g: Graph) -> frozenset[Edge]:
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("removable_edges requires a matching covered graph")
    return frozenset(e for e in g.edges() if is_matching_covered(g.without_edge(*e)))
