"""Factor-criticality, deletable edges, barriers, 2-separations and bricks."""

from __future__ import annotations

import enum
from itertools import combinations

from .graph import (
    Edge,
    Graph,
    GraphError,
    VertexSet,
    components,
    is_connected,
    is_k_connected,
    mask_of,
    odd_component_count,
    vertex_cuts,
)
from .matching import has_perfect_matching


class NotBicriticalError(GraphError):
    pass


class NoPerfectMatchingError(GraphError):
    pass


class BrickKind(str, enum.Enum):
    NOT_BICRITICAL = "not-bicritical"
    BICRITICAL_NOT_BRICK = "bicritical-not-brick"
    BRICK_NOT_MINIMAL = "brick-not-minimal"
    MINIMAL_BRICK = "minimal-brick"


class SeparationKind(str, enum.Enum):
    BARRIER = "barrier"
    SEPARATION = "separation"


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k < g.order:
        raise GraphError(f"k={k} out of range 1..{g.order - 1}")


def first_failing_subset(g: Graph, k: int) -> VertexSet | None:
    """The lexicographically first ``k``-set whose deletion leaves no perfect
    matching, or ``None`` when ``g`` is ``k``-factor-critical."""
    _check_k(g, k)
    if (g.order - k) & 1:
        return tuple(range(k))
    for s in combinations(range(g.order), k):
        if not has_perfect_matching(g, mask_of(s)):
            return s
    return None


def is_k_factor_critical(g: Graph, k: int) -> bool:
    _check_k(g, k)
    n = g.order
    if (n - k) & 1 or g.min_degree() < k + 1:
        return False
    return all(has_perfect_matching(g, mask_of(s)) for s in combinations(range(n), k))


def is_bicritical(g: Graph) -> bool:
    return g.order >= 4 and is_k_factor_critical(g, 2)


def deletable_edges(g: Graph) -> frozenset[Edge]:
    """Edges whose deletion leaves ``g`` bicritical."""
    if not is_bicritical(g):
        raise NotBicriticalError("deletable_edges requires a bicritical graph")
    return frozenset(e for e in g.edges() if is_bicritical(g.without_edge(*e)))


def is_minimal_k_factor_critical(g: Graph, k: int) -> bool:
    if not is_k_factor_critical(g, k):
        return False
    return not any(is_k_factor_critical(g.without_edge(*e), k) for e in g.edges())


def is_minimal_bicritical(g: Graph) -> bool:
    return g.order >= 4 and is_minimal_k_factor_critical(g, 2)


def is_barrier(g: Graph, s) -> bool:
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("barriers are defined for graphs with a perfect matching")
    s = tuple(s)
    return odd_component_count(g, s) == len(s)


def classify_separation(g: Graph, cut) -> SeparationKind:
    return SeparationKind.SEPARATION if odd_component_count(g, cut) != 2 else SeparationKind.BARRIER


def two_separations(g: Graph) -> list[VertexSet]:
    """2-vertex cuts that are not barriers, lexicographic."""
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("2-separations are defined for graphs with a perfect matching")
    if g.order < 3:
        return []
    return [s for s in vertex_cuts(g, 2) if odd_component_count(g, s) != 2]


def is_brick(g: Graph) -> bool:
    return is_k_connected(g, 3) and is_bicritical(g)


def classify_brick(g: Graph) -> BrickKind:
    if not is_bicritical(g):
        return BrickKind.NOT_BICRITICAL
    if not is_k_connected(g, 3):
        return BrickKind.BICRITICAL_NOT_BRICK
    for e in g.edges():
        if is_brick(g.without_edge(*e)):
            return BrickKind.BRICK_NOT_MINIMAL
    return BrickKind.MINIMAL_BRICK


def separation_components(g: Graph, cut) -> list[int]:
    """Component masks of ``g - cut``; ``g`` must be connected."""
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    return components(g, mask_of(cut))
