"""Exhaustive census over small graphs and counterexample hunting.

Graphs come either from the built-in generator or from a graph6 stream.  Each
graph passes through the filter pipeline

    connected -> min degree >= 3 -> even order -> bicritical -> minimal

and the selected checks run on every graph that survives the cheap filters.
Per-graph partial results are merged with an associative, commutative
reduction, so the final report does not depend on the number of workers.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import random
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Iterator, Sequence

from .canon import canonical_form
from .codecs import emit_graph6, parse_graph6
from .criticality import deletable_edges, is_minimal_bicritical
from .decomposition import split_at, LabeledGraph
from .enumeration import connected_codes
from .generators import wheel
from .graph import Graph, is_connected, is_wheel
from .matching import removable_edges
from .verify import (
    CHECKS,
    PROBES,
    Analysis,
    Status,
    VerdictReport,
    random_glue_instances,
    resolve_checks,
    verify_glue_equivalence,
    verify_minimal_gluing,
)


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


@dataclass
class OrderStats:
    order: int
    examined: int = 0
    connected: int = 0
    candidates: int = 0  # connected, even order, min degree >= 3
    bicritical: int = 0
    minimal_bicritical: int = 0
    bricks: int = 0
    minimal_bricks: int = 0
    no_removable: int = 0
    min_cubic_minimal: int | None = None
    sharpness: list[str] = field(default_factory=list)
    removable_minimal: list[str] = field(default_factory=list)
    split_half_not_minimal: list[str] = field(default_factory=list)
    wheels: list[str] = field(default_factory=list)
    trees: int = 0
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    def merge(self, other: "OrderStats") -> "OrderStats":
        assert self.order == other.order
        for name in ("examined", "connected", "candidates", "bicritical", "minimal_bicritical",
                     "bricks", "minimal_bricks", "no_removable", "trees"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        mins = [x for x in (self.min_cubic_minimal, other.min_cubic_minimal) if x is not None]
        self.min_cubic_minimal = min(mins) if mins else None
        for name in ("sharpness", "removable_minimal", "split_half_not_minimal", "wheels"):
            setattr(self, name, sorted(set(getattr(self, name)) | set(getattr(other, name))))
        for check, tally in other.checks.items():
            mine = self.checks.setdefault(check, {s.value: 0 for s in Status})
            for k, v in tally.items():
                mine[k] += v
        self.failures = sorted(self.failures + other.failures,
                               key=lambda r: (r["subject"], r["check"], json.dumps(r, sort_keys=True)))
        return self

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "examined": self.examined,
            "connected": self.connected,
            "candidates": self.candidates,
            "bicritical": self.bicritical,
            "minimal_bicritical": self.minimal_bicritical,
            "bricks": self.bricks,
            "minimal_bricks": self.minimal_bricks,
            "bicritical_without_removable": self.no_removable,
            "min_cubic_among_minimal_bicritical": self.min_cubic_minimal,
            "sharpness_witnesses": self.sharpness,
            "minimal_with_removable_edge": self.removable_minimal,
            "minimal_with_nonminimal_split_half": self.split_half_not_minimal,
            "minimal_bicritical_wheels": self.wheels,
            "decomposition_trees": self.trees,
            "checks": {k: dict(sorted(v.items())) for k, v in sorted(self.checks.items())},
            "failures": self.failures,
        }


@dataclass
class CensusReport:
    orders: dict[int, OrderStats] = field(default_factory=dict)
    checks: list[str] = field(default_factory=list)
    trials: int = 10
    seed: int = 0
    glue: dict | None = None

    @property
    def failures(self) -> list[dict]:
        out = [f for o in sorted(self.orders) for f in self.orders[o].failures]
        if self.glue:
            out += self.glue["failures"]
        return out

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = {
            "checks": self.checks,
            "trials": self.trials,
            "seed": self.seed,
            "orders": {str(n): self.orders[n].to_dict() for n in sorted(self.orders)},
            "wheels": wheel_report(sorted(self.orders)),
            "passed": self.passed,
        }
        if self.glue is not None:
            d["glue"] = self.glue
        return d

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def witnesses(self) -> list[str]:
        codes: set[str] = set()
        for st in self.orders.values():
            codes.update(st.sharpness, st.removable_minimal, st.split_half_not_minimal, st.wheels)
            codes.update(f["subject"] for f in st.failures)
        return sorted(codes, key=lambda c: (parse_graph6(c).order, c))


def wheel_report(orders: Iterable[int]) -> dict[str, bool]:
    """Which wheels ``W_k`` (``k + 1`` in ``orders``) are minimal bicritical."""
    out = {}
    for n in orders:
        if n >= 4:
            out[f"W{n - 1}"] = is_minimal_bicritical(wheel(n - 1))
    return out


def _has_nonminimal_half(a: Analysis) -> bool:
    for sep in a.separations:
        for side in split_at(LabeledGraph.root(a.graph), sep):
            if deletable_edges(side.graph):
                return True
    return False


def census_one(g: Graph | str, checks: Sequence[str], trials: int = 10, seed: int = 0) -> OrderStats:
    if isinstance(g, str):
        g = parse_graph6(g)
    st = OrderStats(g.order, examined=1)
    if not is_connected(g) or g.order == 0:
        return st
    st.connected = 1
    if g.order & 1 or g.order < 4 or g.min_degree() < 3:
        return st
    st.candidates = 1
    a = Analysis(g, trials, seed)
    for name in checks:
        for r in (CHECKS.get(name) or PROBES[name])(a):
            tally = st.checks.setdefault(r.check, {s.value: 0 for s in Status})
            tally[r.status.value] += 1
            if r.status is Status.FAIL:
                st.failures.append(r.to_dict())
    if not a.bicritical:
        return st
    st.bicritical = 1
    st.trees = len(a.trees) if any(c in checks for c in ("tree_counts", "marker_leaves",
                                                          "decomposition_invariance", "leaf_deletable",
                                                          "degree_preservation", "split_children")) else 0
    code = canonical_form(g)
    if a.three_connected:
        st.bricks = 1
    if a.brick_kind.value == "minimal-brick":
        st.minimal_bricks = 1
    removable = removable_edges(g)
    if not removable:
        st.no_removable = 1
    if a.minimal:
        st.minimal_bicritical = 1
        c = len(a.cubic)
        st.min_cubic_minimal = c
        if c == 4:
            st.sharpness.append(code)
        if removable:
            st.removable_minimal.append(code)
            if a.separations and _has_nonminimal_half(a):
                st.split_half_not_minimal.append(code)
        if is_wheel(g):
            st.wheels.append(code)
    return st


def _map(fn, items: Iterable, workers: int) -> Iterator:
    if workers <= 1:
        yield from map(fn, items)
        return
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        yield from pool.imap(fn, items, chunksize=32)


def census_stream(graphs: Iterable[Graph | str], checks: Sequence[str] | str | None = None,
                  workers: int = 1, trials: int = 10, seed: int = 0) -> CensusReport:
    names = resolve_checks(checks)
    report = CensusReport(checks=names, trials=trials, seed=seed)
    items = (emit_graph6(g) if isinstance(g, Graph) else g for g in graphs)
    fn = partial(census_one, checks=names, trials=trials, seed=seed)
    for st in _map(fn, items, workers):
        if st.order in report.orders:
            report.orders[st.order].merge(st)
        else:
            report.orders[st.order] = OrderStats(st.order).merge(st)
    return report


def census(n_range: Iterable[int], checks: Sequence[str] | str | None = None, workers: int = 1,
           trials: int = 10, seed: int = 0, glue_instances: int = 0) -> CensusReport:
    """Census over all connected graphs of each order in ``n_range``."""
    orders = list(n_range)

    def codes():
        for n in orders:
            yield from connected_codes(n)

    report = census_stream(codes(), checks, workers, trials, seed)
    for n in orders:
        report.orders.setdefault(n, OrderStats(n))
    if glue_instances:
        report.glue = glue_census(glue_instances, seed)
    return report


def glue_pool(max_order: int = 6) -> list[Graph]:
    """Connected graphs of order 3..``max_order``; bicritical ones are repeated
    so that both-halves-bicritical instances are common."""
    pool = []
    for n in range(3, max_order + 1):
        for code in connected_codes(n):
            g = parse_graph6(code)
            pool.append(g)
            if n >= 4 and g.min_degree() >= 3 and Analysis(g).bicritical:
                pool.extend([g] * 8)
    return pool


def glue_census(count: int, seed: int = 0, max_order: int = 6) -> dict:
    """Check the glue equivalence on ``count`` random instances, plus every
    gluing of two minimal bicritical halves from the pool along an edge."""
    pool = glue_pool(max_order)
    tally = {s.value: 0 for s in Status}
    outcomes = {"both_halves_bicritical": 0, "whole_bicritical": 0}
    failures = []
    for p1, a1, p2, a2 in random_glue_instances(count, pool, seed):
        r = verify_glue_equivalence(p1, a1, p2, a2)
        tally[r.status.value] += 1
        outcomes["both_halves_bicritical"] += all(r.stats["halves"])
        outcomes["whole_bicritical"] += r.stats["whole"]
        if not r.passed:
            failures.append(r.to_dict())
    minimal = sorted({canonical_form(g) for g in pool if g.order >= 4 and is_minimal_bicritical(g)})
    mtally = {s.value: 0 for s in Status}
    for c1 in minimal:
        h1 = parse_graph6(c1)
        for c2 in minimal:
            h2 = parse_graph6(c2)
            for e1 in h1.edges():
                r = verify_minimal_gluing(h1, e1, h2, h2.edges()[0])
                mtally[r.status.value] += 1
                if not r.passed:
                    failures.append(r.to_dict())
    return {"instances": count, "equivalence": tally, "outcomes": outcomes,
            "minimal_halves": minimal, "minimal_gluing": mtally, "failures": failures}


def hunt_counterexample(predicate: str, n_max: int, workers: int = 1, n_min: int = 1,
                        trials: int = 10, seed: int = 0) -> VerdictReport | None:
    """First connected graph (by order, then canonical code) failing ``predicate``."""
    if predicate not in CHECKS and predicate not in PROBES:
        raise KeyError(f"unknown predicate {predicate!r}")
    fn = partial(_hunt_one, predicate=predicate, trials=trials, seed=seed)
    for n in range(n_min, n_max + 1):
        for result in _map(fn, connected_codes(n), workers):
            if result is not None:
                return VerdictReport.from_record(result)
    return None


def _hunt_one(code: str, predicate: str, trials: int, seed: int) -> str | None:
    a = Analysis(parse_graph6(code), trials, seed)
    for r in (CHECKS.get(predicate) or PROBES[predicate])(a):
        if r.status is Status.FAIL:
            return r.to_record()
    return None


def random_order_stream(codes: Sequence[str], seed: int) -> list[str]:
    """Shuffled copy of ``codes``; used to show reports are order-independent."""
    out = list(codes)
    random.Random(seed).shuffle(out)
    return out
