"""Shared fixtures and independent reference implementations for the tests.

The references here are deliberately naive (networkx, permutations, numpy
brute force) so that agreement with the package is meaningful.
"""

from __future__ import annotations

import itertools
import time

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from bicrit import generators as gen
from bicrit.graph import Graph, from_edge_list


@pytest.fixture
def k4():
    return gen.complete(4)


@pytest.fixture
def c4():
    return gen.cycle(4)


@pytest.fixture
def c6():
    return gen.cycle(6)


@pytest.fixture
def d4():
    return gen.double_k4()


@pytest.fixture
def t8():
    return gen.triple_k4()


@pytest.fixture
def octa():
    return gen.octahedron()


@pytest.fixture
def pete():
    return gen.petersen()


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return from_edge_list(len(index), [(index[a], index[b]) for a, b in h.edges])


def atlas(max_order: int = 7):
    """Every graph up to ``max_order`` vertices (order >= 1) from networkx's atlas."""
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_order:
            yield from_nx(h)


# ---------------------------------------------------------------------------
# brute-force canonical codes with numpy


def _pairs(n):
    return list(itertools.combinations(range(n), 2))


def brute_canonical_codes(n: int) -> np.ndarray:
    """For each labelled graph on ``n`` vertices (an integer over the pair
    bits), the minimum integer over all vertex permutations."""
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    m = len(pairs)
    codes = np.arange(1 << m, dtype=np.int64)
    bitsarr = (codes[:, None] >> np.arange(m)) & 1
    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        target = np.array([index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs], dtype=np.int64)
        permuted = (bitsarr << target).sum(axis=1)
        np.minimum(best, permuted, out=best)
    return best


def graph_from_pairs(n: int, mask: int) -> Graph:
    return from_edge_list(n, [p for i, p in enumerate(_pairs(n)) if mask >> i & 1])


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def graphs(draw, min_order=1, max_order=9):
    n = draw(st.integers(min_order, max_order))
    pairs = _pairs(n)
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


@pytest.fixture(scope="session")
def full_census():
    """Census over orders 4, 6 and 8 with every check, single worker.

    The wall time is kept on the report as ``elapsed``.
    """
    from bicrit.census import census

    start = time.perf_counter()
    report = census([4, 6, 8], "all", workers=1)
    report.elapsed = time.perf_counter() - start
    return report


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
