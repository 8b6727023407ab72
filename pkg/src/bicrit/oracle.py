"""Brute-force predicates over plain edge lists.

These deliberately share no code with the bitset graph type or the blossom
matcher; failing verdicts are re-checked through them.
"""

from __future__ import annotations

from itertools import combinations, permutations


def _nbrs(n, edges):
    nb = {v: set() for v in range(n)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def degrees(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def has_pm(n, edges, removed=()):
    nb = _nbrs(n, edges)
    left = frozenset(range(n)) - frozenset(removed)

    def rec(rest):
        if not rest:
            return True
        x = min(rest)
        return any(rec(rest - {x, y}) for y in nb[x] if y in rest)

    return len(left) % 2 == 0 and rec(left)


def is_k_fc(n, edges, k):
    if not 1 <= k < n:
        return False
    return all(has_pm(n, edges, s) for s in combinations(range(n), k))


def is_bicritical(n, edges):
    return n >= 4 and is_k_fc(n, edges, 2)


def minus(edges, e):
    e = tuple(sorted(e))
    return [f for f in edges if tuple(sorted(f)) != e]


def is_minimal_k_fc(n, edges, k):
    return is_k_fc(n, edges, k) and not any(is_k_fc(n, minus(edges, e), k) for e in edges)


def connected(n, edges, removed=()):
    left = set(range(n)) - set(removed)
    if not left:
        return True
    nb = _nbrs(n, edges)
    start = min(left)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in nb[x]:
            if y in left and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen == left


def three_connected(n, edges):
    if n <= 3:
        return False
    return all(
        connected(n, edges, s) for k in (0, 1, 2) for s in combinations(range(n), k)
    )


def is_brick(n, edges):
    return three_connected(n, edges) and is_bicritical(n, edges)


def is_minimal_brick(n, edges):
    return is_brick(n, edges) and not any(is_brick(n, minus(edges, e)) for e in edges)


def is_matching_covered(n, edges):
    if n < 2 or not connected(n, edges):
        return False
    return all(has_pm(n, edges, e) for e in edges)


def isomorphic(n1, e1, n2, e2):
    if n1 != n2 or len(e1) != len(e2):
        return False
    target = {frozenset(e) for e in e2}
    return any(
        {frozenset((p[u], p[v])) for u, v in e1} == target for p in permutations(range(n1))
    )


def induced_plus(edges, vertices, extra=()):
    """Edges among ``vertices`` relabelled to ``0..k-1`` in the given order,
    plus ``extra`` edges given in original labels."""
    idx = {v: i for i, v in enumerate(vertices)}
    out = {tuple(sorted((idx[u], idx[v]))) for u, v in edges if u in idx and v in idx}
    out |= {tuple(sorted((idx[u], idx[v]))) for u, v in extra}
    return len(vertices), sorted(out)
