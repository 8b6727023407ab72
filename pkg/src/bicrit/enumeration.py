"""Isomorph-free generation of small graphs by canonical augmentation.

A graph on ``n`` vertices is produced from a parent on ``n - 1`` vertices by
adding one vertex with a chosen neighbourhood.  The child is kept only when
the added vertex is a *canonical deletion*: among the vertices whose removal
keeps the child in the class (non-cut vertices for connected generation),
pick those with the largest cheap invariant, and among those the one with the
highest canonical label.  The child is accepted iff deleting that vertex gives
a graph isomorphic to the parent.  Parents are pairwise non-isomorphic, so a
child class can only be reached from one parent; repeated hits from the same
parent are removed with a per-parent set of canonical codes.

Every emitted graph is in canonical labelling, so ``emit_graph6`` of it is its
canonical code.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_form, canonical_labeling
from .codecs import emit_graph6, parse_graph6
from .graph import Graph, GraphError, components

MAX_BUILTIN_ORDER = 10


class OrderOutOfRangeError(GraphError):
    pass


def _invariant(adj, v):
    a = adj[v]
    nd = []
    m = a
    while m:
        low = m & -m
        nd.append(adj[low.bit_length() - 1].bit_count())
        m ^= low
    nd.sort()
    return (a.bit_count(), tuple(nd))


def _candidate_mask(g: Graph, connected: bool) -> int:
    n = g.order
    if not connected:
        return g.full_mask
    m = 0
    for v in range(n):
        if len(components(g, 1 << v)) <= 1:
            m |= 1 << v
    return m


def _children(parent: Graph, parent_code: str, connected: bool) -> list[Graph]:
    p = parent.order
    n = p + 1
    new = p
    out: dict[str, Graph] = {}
    start = 1 if connected else 0
    for s in range(start, 1 << p):
        adj = list(parent.adjacency)
        for w in range(p):
            if s >> w & 1:
                adj[w] |= 1 << new
        adj.append(s)
        child = Graph(n, adj)
        cand = _candidate_mask(child, connected)
        if not cand >> new & 1:
            continue
        inv = _invariant(adj, new)
        best = [v for v in range(n) if cand >> v & 1 and _invariant(adj, v) == inv]
        if any(_invariant(adj, v) > inv for v in range(n) if cand >> v & 1):
            continue
        perm, _ = canonical_labeling(child)
        code = emit_graph6(child.relabel(perm))
        if code in out:
            continue
        if len(best) > 1:
            d = max(best, key=lambda v: perm[v])
            if d != new:
                keep = [v for v in range(n) if v != d]
                if canonical_form(child.induced(keep)) != parent_code:
                    continue
        out[code] = parse_graph6(code)
    return list(out.values())


@lru_cache(maxsize=None)
def _level(n: int, connected: bool) -> tuple[str, ...]:
    if n == 1:
        return ("@",)
    codes = []
    for pc in _level(n - 1, connected):
        parent = parse_graph6(pc)
        codes.extend(emit_graph6(c) for c in _children(parent, pc, connected))
    return tuple(codes)


def _check(n: int) -> None:
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise OrderOutOfRangeError(
            f"built-in enumeration covers orders 1..{MAX_BUILTIN_ORDER}; use a graph6 stream for n={n}"
        )


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices once, up to isomorphism."""
    _check(n)
    for code in _level(n, True):
        yield parse_graph6(code)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every graph on ``n`` vertices once, up to isomorphism."""
    _check(n)
    for code in _level(n, False):
        yield parse_graph6(code)


def connected_codes(n: int) -> tuple[str, ...]:
    """Canonical graph6 codes of the connected graphs of order ``n``, sorted."""
    _check(n)
    return tuple(sorted(_level(n, True)))
