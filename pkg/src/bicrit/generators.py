"""Small named graphs used in examples, tests and reports."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, from_edge_list


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(k: int) -> Graph:
    """W_k: hub 0 joined to a k-cycle on 1..k."""
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)] + rim)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


def cube() -> Graph:
    return from_edge_list(8, [(a, a ^ 1 << b) for a in range(8) for b in range(3) if a < a ^ 1 << b])


def octahedron() -> Graph:
    """K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5)."""
    return from_edge_list(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def stacked_k4(copies: int) -> Graph:
    """``copies`` copies of K4 - uv sharing u=0 and v=1 (no edge uv)."""
    edges = []
    for c in range(copies):
        a, b = 2 + 2 * c, 3 + 2 * c
        edges += [(0, a), (0, b), (1, a), (1, b), (a, b)]
    return from_edge_list(2 + 2 * copies, edges)


def double_k4() -> Graph:
    """D4: two copies of K4 - uv glued on u=0, v=1."""
    return stacked_k4(2)


def triple_k4() -> Graph:
    """T8: three copies of K4 - uv glued on u=0, v=1."""
    return stacked_k4(3)


NAMED = {
    "K4": lambda: complete(4),
    "C4": lambda: cycle(4),
    "C6": lambda: cycle(6),
    "K33": lambda: complete_bipartite(3, 3),
    "Q3": cube,
    "octahedron": octahedron,
    "petersen": petersen,
    "D4": double_k4,
    "T8": triple_k4,
}
