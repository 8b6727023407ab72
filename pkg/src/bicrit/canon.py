"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual individualise-refine tree: the equitable
refinement of the unit partition is the root, and each child individualises
one vertex of the first non-singleton cell.  Leaves are discrete partitions;
the leaf whose relabelled adjacency code is largest wins.  Two prunings keep
symmetric inputs cheap:

* a leaf equivalent to the first (or best) leaf yields an automorphism, and
  the search jumps back to where the two paths diverged;
* at every node, children in the same orbit of the automorphisms found so
  far that fix the current path pointwise are skipped.
"""

from __future__ import annotations

from functools import lru_cache

from .codecs import emit_graph6
from .graph import Graph

MAX_ORDER = 16


class OrderLimitError(ValueError):
    pass


def _refine(adj, cells):
    # Split cells by neighbour counts into every cell until equitable.
    # Fragments are ordered by count so the result is label-invariant.
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            wmask = 0
            for w in cells[si]:
                wmask |= 1 << w
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                counts = {}
                for x in cell:
                    counts.setdefault((adj[x] & wmask).bit_count(), []).append(x)
                if len(counts) == 1:
                    out.append(cell)
                else:
                    split = True
                    for c in sorted(counts):
                        out.append(counts[c])
            if split:
                cells = out
                changed = True
                break
    return cells


def _leaf_code(adj, n, order):
    # order[i] = vertex placed at canonical position i
    code = 0
    for j in range(1, n):
        a = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (a >> order[i] & 1)
    return code


def _orbit_reps(n, gens, fixed):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adjacency
        self.n = g.order
        self.first = None  # (code, order, path)
        self.best = None
        self.gens: list[list[int]] = []

    def run(self):
        root = _refine(self.adj, [list(range(self.n))]) if self.n else []
        self._node(root, [])
        return self.best, self.gens

    def _automorphism(self, src_order, dst_order):
        perm = [0] * self.n
        for a, b in zip(src_order, dst_order):
            perm[a] = b
        if any(perm[v] != v for v in range(self.n)):
            self.gens.append(perm)

    def _node(self, cells, path):
        # returns None, or a level to unwind to
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(self.adj, self.n, order)
            if self.first is None:
                self.first = self.best = (code, order, list(path))
                return None
            if code == self.first[0]:
                self._automorphism(self.first[1], order)
                return _common_prefix(path, self.first[2])
            if code == self.best[0]:
                self._automorphism(self.best[1], order)
                return _common_prefix(path, self.best[2])
            if code > self.best[0]:
                self.best = (code, order, list(path))
            return None

        level = len(path)
        ti = cells.index(target)
        explored_reps = set()
        for v in sorted(target):
            find = _orbit_reps(self.n, self.gens, path)
            rep = find(v)
            if rep in {find(u) for u in explored_reps}:
                continue
            explored_reps.add(v)
            rest = [x for x in target if x != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            child = _refine(self.adj, child)
            path.append(v)
            jump = self._node(child, path)
            path.pop()
            if jump is not None and jump < level:
                return jump
        return None


def _common_prefix(a, b):
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labeling(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Return ``(perm, generators)``.

    ``perm[v]`` is the canonical position of vertex ``v``; ``generators`` are
    the automorphisms discovered during the search.
    """
    if g.order > MAX_ORDER:
        raise OrderLimitError(f"canonical form supports order <= {MAX_ORDER}, got {g.order}")
    if g.order == 0:
        return [], []
    best, gens = _Search(g).run()
    order = best[1]
    perm = [0] * g.order
    for i, v in enumerate(order):
        perm[v] = i
    return perm, gens


def canonical_graph(g: Graph) -> Graph:
    perm, _ = canonical_labeling(g)
    return g.relabel(perm)


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return emit_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_orbits(g: Graph) -> list[list[int]]:
    _, gens = canonical_labeling(g)
    find = _orbit_reps(g.order, gens, ())
    groups: dict[int, list[int]] = {}
    for v in range(g.order):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


__all__ = [
    "MAX_ORDER",
    "OrderLimitError",
    "automorphism_orbits",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "is_isomorphic",
]
