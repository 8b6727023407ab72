"""Named checks of the structural results on bicritical graphs.

Every check returns a :class:`VerdictReport`.  Checks that do not apply to
their input (for example the cubic-vertex bound on a graph that is not
minimal bicritical) return status ``vacuous`` rather than ``pass`` so that
census statistics separate applicability from truth.

A failing verdict always carries a witness, and :func:`recheck` reproduces
the failure from the witness using the brute-force predicates in
:mod:`bicrit.oracle` rather than the code paths that produced it.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from . import oracle
from .codecs import emit_graph6, parse_graph6
from .criticality import (
    BrickKind,
    NotBicriticalError,
    classify_brick,
    deletable_edges,
    is_bicritical,
    is_minimal_k_factor_critical,
    two_separations,
)
from .decomposition import (
    DecompositionTree,
    LabeledGraph,
    SeparationPolicy,
    brick_decomposition,
    brick_multiset,
    glue,
    split_at,
    tree_counts,
)
from .graph import (
    Graph,
    GraphError,
    bits,
    components,
    cubic_vertices,
    find_k33,
    find_wheel,
    is_connected,
    is_k_connected,
    is_wheel,
)
from .matching import is_matching_covered


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


class InapplicableError(ValueError):
    pass


class NotMinimalBicriticalError(GraphError):
    pass


@dataclass
class VerdictReport:
    check: str
    subject: str
    status: Status
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        self.status = Status(self.status)
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @property
    def passed(self) -> bool:
        return self.status is not Status.FAIL

    @property
    def vacuous(self) -> bool:
        return self.status is Status.VACUOUS

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "subject": self.subject,
            "status": self.status.value,
            "witness": self.witness,
            "stats": self.stats,
        }

    def to_record(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_record(cls, line: str) -> "VerdictReport":
        d = json.loads(line)
        return cls(d["check"], d["subject"], Status(d["status"]), d.get("witness"), d.get("stats", {}))


def _edges(es) -> list[list[int]]:
    return [list(e) for e in sorted(es)]


# ---------------------------------------------------------------------------
# per-graph analysis shared by the checks


class Analysis:
    """Lazily computed facts about one graph, shared read-only by checks."""

    def __init__(self, g: Graph, trials: int = 10, seed: int = 0):
        self.graph = g
        self.trials = trials
        self.seed = seed

    @cached_property
    def code(self) -> str:
        return emit_graph6(self.graph)

    @cached_property
    def bicritical(self) -> bool:
        return is_bicritical(self.graph)

    @cached_property
    def deletable(self) -> frozenset | None:
        return deletable_edges(self.graph) if self.bicritical else None

    @cached_property
    def minimal(self) -> bool:
        return self.bicritical and not self.deletable

    @cached_property
    def three_connected(self) -> bool:
        return is_k_connected(self.graph, 3)

    @cached_property
    def separations(self) -> list[tuple[int, int]]:
        return two_separations(self.graph) if self.bicritical else []

    @cached_property
    def brick_kind(self) -> BrickKind:
        if not self.bicritical:
            return BrickKind.NOT_BICRITICAL
        if not self.three_connected:
            return BrickKind.BICRITICAL_NOT_BRICK
        return classify_brick(self.graph)

    @cached_property
    def cubic(self) -> tuple[int, ...]:
        return cubic_vertices(self.graph)

    def policies(self) -> list[SeparationPolicy]:
        return [SeparationPolicy()] + [
            SeparationPolicy.seeded(self.seed + i) for i in range(1, self.trials + 1)
        ]

    @cached_property
    def trees(self) -> list[tuple[SeparationPolicy, DecompositionTree]]:
        if not self.bicritical:
            return []
        return [(p, brick_decomposition(self.graph, p)) for p in self.policies()]

    @property
    def lex_tree(self) -> DecompositionTree | None:
        return self.trees[0][1] if self.trees else None


def _ctx(g: Graph, ctx: Analysis | None) -> Analysis:
    return ctx if ctx is not None else Analysis(g)


# ---------------------------------------------------------------------------
# checks


def verify_main_theorem(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """Minimal bicritical graphs have at least four cubic vertices."""
    a = _ctx(g, ctx)
    if not a.minimal:
        return VerdictReport("main_theorem", a.code, Status.VACUOUS,
                             stats={"applicable": False, "bicritical": a.bicritical})
    c = len(a.cubic)
    stats = {"applicable": True, "cubic": c}
    if c >= 4:
        return VerdictReport("main_theorem", a.code, Status.PASS, stats=stats)
    return VerdictReport("main_theorem", a.code, Status.FAIL, {"cubic_vertices": list(a.cubic)}, stats)


def verify_minimal_brick_cubics(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    a = _ctx(g, ctx)
    if a.brick_kind is not BrickKind.MINIMAL_BRICK:
        return VerdictReport("minimal_brick_cubics", a.code, Status.VACUOUS,
                             stats={"applicable": False, "kind": a.brick_kind.value})
    c = len(a.cubic)
    stats = {"applicable": True, "cubic": c}
    if c >= 4:
        return VerdictReport("minimal_brick_cubics", a.code, Status.PASS, stats=stats)
    return VerdictReport("minimal_brick_cubics", a.code, Status.FAIL,
                         {"cubic_vertices": list(a.cubic)}, stats)


def _tree_subject(t: DecompositionTree) -> str:
    return emit_graph6(t.root.labeled.graph)


def verify_tree_counts(t: DecompositionTree) -> VerdictReport:
    """Splits equal bricks minus one; brick markers total at most twice the splits."""
    s, b, mt = tree_counts(t)
    stats = {"splits": s, "bricks": b, "markers": mt}
    ok = s == b - 1 and mt <= 2 * s
    if ok:
        return VerdictReport("tree_counts", _tree_subject(t), Status.PASS, stats=stats)
    return VerdictReport("tree_counts", _tree_subject(t), Status.FAIL,
                         {"policy": str(t.policy), "splits": s, "bricks": b, "markers": mt}, stats)


def verify_marker_lemma(t: DecompositionTree) -> VerdictReport:
    """At least two bricks carry exactly one marker edge."""
    leaves = t.leaves()
    if len(leaves) < 2:
        raise InapplicableError("the root is already a brick")
    s, b, mt = tree_counts(t)
    single = sum(1 for x in leaves if x.labeled.marker_count == 1)
    stats = {"splits": s, "bricks": b, "markers": mt, "single_marker_bricks": single}
    if single >= 2 and s == b - 1 and mt <= 2 * s:
        return VerdictReport("marker_leaves", _tree_subject(t), Status.PASS, stats=stats)
    witness = {"policy": str(t.policy), "leaf_markers": [x.labeled.marker_count for x in leaves],
               "splits": s}
    return VerdictReport("marker_leaves", _tree_subject(t), Status.FAIL, witness, stats)


def verify_decomposition_invariance(g: Graph, trials: int = 10, seed: int = 0,
                                    ctx: Analysis | None = None) -> VerdictReport:
    """Brick lists agree across the lexicographic and ``trials`` random policies."""
    a = ctx if ctx is not None and ctx.trials == trials and ctx.seed == seed else Analysis(g, trials, seed)
    if not a.bicritical:
        raise NotBicriticalError("decomposition invariance needs a bicritical graph")
    (p0, t0), *rest = a.trees
    ref = brick_multiset(t0)
    for p, t in rest:
        ms = brick_multiset(t)
        if ms != ref:
            return VerdictReport("decomposition_invariance", a.code, Status.FAIL,
                                 {"policies": [str(p0), str(p)], "multisets": [list(ref), list(ms)]},
                                 {"policies": len(a.trees)})
    return VerdictReport("decomposition_invariance", a.code, Status.PASS,
                         stats={"policies": len(a.trees), "bricks": len(ref)})


def _de_original(lg: LabeledGraph) -> set:
    return {lg.to_original(e) for e in deletable_edges(lg.graph)}


def verify_deletable_transfer(g: Graph, sep: Sequence[int], ctx: Analysis | None = None,
                              recurse: bool = True) -> VerdictReport:
    """Deletable edges of each side match the deletable edges of the whole.

    With ``uv`` absent from the split graph, ``DE(side) - {uv}`` must equal
    ``DE(whole) & E(side)``; with ``uv`` present, ``DE(side) | {uv}`` must.
    When ``recurse`` is set the identity is also checked at every further
    split of a lexicographic decomposition below ``sep``.
    """
    a = _ctx(g, ctx)
    if not a.bicritical:
        raise NotBicriticalError("deletable-edge transfer needs a bicritical graph")
    sep = tuple(sorted(sep))
    if sep not in a.separations:
        raise GraphError(f"{sep} is not a 2-separation")
    counts = {"absent": 0, "present": 0}
    work = [(LabeledGraph.root(g), sep)]
    while work:
        lg, cut = work.pop()
        de_node = _de_original(lg)
        u, v = cut
        uv = lg.to_original((u, v))
        present = lg.graph.has_edge(u, v)
        counts["present" if present else "absent"] += 1
        for i, side in enumerate(split_at(lg, cut)):
            base = {
                "pair": list(uv),
                "side": i,
                "node_vertices": list(lg.origin),
                "node_markers": _edges(lg.original_markers()),
                "side_vertices": list(side.origin),
            }
            if not is_bicritical(side.graph):
                return VerdictReport("deletable_transfer", a.code, Status.FAIL,
                                     dict(base, violation="side_not_bicritical"), counts)
            de_side = _de_original(side)
            lhs = de_side | {uv} if present else de_side - {uv}
            rhs = de_node & side.original_edges()
            if lhs != rhs:
                return VerdictReport("deletable_transfer", a.code, Status.FAIL,
                                     dict(base, violation="mismatch", lhs=_edges(lhs), rhs=_edges(rhs)),
                                     counts)
            if recurse and not is_k_connected(side.graph, 3):
                seps = two_separations(side.graph)
                seps.sort(key=lambda s: tuple(sorted(side.origin[x] for x in s)))
                work.append((side, seps[0]))
    return VerdictReport("deletable_transfer", a.code, Status.PASS, stats=counts)


def verify_separation_properties(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """Per 2-separation ``{u, v}``: even components, two neighbours of ``u`` and
    of ``v`` in each component, and ``uv`` deletable and removable if present."""
    a = _ctx(g, ctx)
    if not a.bicritical:
        raise NotBicriticalError("separation properties need a bicritical graph")
    adj = g.adjacency
    adjacent = 0
    for u, v in a.separations:
        base = {"pair": [u, v]}
        for comp in components(g, 1 << u | 1 << v):
            cv = bits(comp)
            if len(cv) & 1:
                return VerdictReport("separation_properties", a.code, Status.FAIL,
                                     dict(base, violation="odd_component", component=cv))
            for x in (u, v):
                if (adj[x] & comp).bit_count() < 2:
                    return VerdictReport("separation_properties", a.code, Status.FAIL,
                                         dict(base, violation="few_neighbours", component=cv, vertex=x))
        if g.has_edge(u, v):
            adjacent += 1
            h = g.without_edge(u, v)
            if not is_bicritical(h):
                return VerdictReport("separation_properties", a.code, Status.FAIL,
                                     dict(base, violation="adjacent_not_deletable"))
            if not is_matching_covered(h):
                return VerdictReport("separation_properties", a.code, Status.FAIL,
                                     dict(base, violation="adjacent_not_removable"))
            if a.minimal:
                return VerdictReport("separation_properties", a.code, Status.FAIL,
                                     dict(base, violation="minimal_with_adjacent_separation"))
    stats = {"separations": len(a.separations), "adjacent": adjacent}
    if not a.separations:
        return VerdictReport("separation_properties", a.code, Status.VACUOUS, stats=stats)
    return VerdictReport("separation_properties", a.code, Status.PASS, stats=stats)


def verify_structural_exclusions(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """No K_{3,3} subgraph, and no wheel subgraph unless the graph is a wheel."""
    a = _ctx(g, ctx)
    if not a.minimal:
        raise NotMinimalBicriticalError("structural exclusions apply to minimal bicritical graphs")
    k33 = find_k33(g)
    if k33 is not None:
        return VerdictReport("structural_exclusions", a.code, Status.FAIL,
                             {"k33": [list(k33[0]), list(k33[1])]})
    wheel = find_wheel(g)
    itself = is_wheel(g)
    if wheel is not None and not itself:
        hub, rim = wheel
        return VerdictReport("structural_exclusions", a.code, Status.FAIL, {"hub": hub, "rim": rim})
    return VerdictReport("structural_exclusions", a.code, Status.PASS,
                         stats={"contains_wheel": wheel is not None, "is_wheel": itself})


def verify_min_degree(g: Graph, k: int = 2, ctx: Analysis | None = None) -> VerdictReport:
    """Minimal ``k``-factor-critical graphs have minimum degree exactly ``k + 1``."""
    code = ctx.code if ctx is not None else emit_graph6(g)
    if not 1 <= k < g.order:
        return VerdictReport("min_degree", code, Status.VACUOUS, stats={"applicable": False, "k": k})
    if k == 2 and ctx is not None:
        applicable = ctx.minimal
    else:
        applicable = is_minimal_k_factor_critical(g, k)
    if not applicable:
        return VerdictReport("min_degree", code, Status.VACUOUS, stats={"applicable": False, "k": k})
    d = g.min_degree()
    stats = {"applicable": True, "k": k, "min_degree": d}
    if d == k + 1:
        return VerdictReport("min_degree", code, Status.PASS, stats=stats)
    return VerdictReport("min_degree", code, Status.FAIL, {"k": k, "min_degree": d}, stats)


def verify_split_children(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """Both sides of every split of a bicritical graph are bicritical.

    Covers every 2-separation of ``g`` itself and every split in every
    decomposition tree built for ``g``.
    """
    a = _ctx(g, ctx)
    if not a.bicritical or not a.separations:
        return VerdictReport("split_children", a.code, Status.VACUOUS)
    splits = [(LabeledGraph.root(g), sep) for sep in a.separations]
    for _, t in a.trees:
        for node in t.internal():
            lg = node.labeled
            splits.append((lg, (lg.local(node.split[0]), lg.local(node.split[1]))))
    checked = 0
    for lg, cut in splits:
        for i, side in enumerate(split_at(lg, cut)):
            checked += 1
            if not is_bicritical(side.graph):
                return VerdictReport("split_children", a.code, Status.FAIL, {
                    "pair": list(lg.to_original(cut)),
                    "node_vertices": list(lg.origin),
                    "node_markers": _edges(lg.original_markers()),
                    "side": i,
                    "side_vertices": list(side.origin),
                })
    return VerdictReport("split_children", a.code, Status.PASS, stats={"sides": checked})


def verify_leaf_deletable(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """In a minimal bicritical graph, bricks have no deletable non-marker edge."""
    a = _ctx(g, ctx)
    if not a.minimal:
        return VerdictReport("leaf_deletable", a.code, Status.VACUOUS)
    leaves = 0
    for p, t in a.trees:
        for leaf in t.leaves():
            leaves += 1
            lg = leaf.labeled
            for e in sorted(deletable_edges(lg.graph) - lg.markers):
                return VerdictReport("leaf_deletable", a.code, Status.FAIL, {
                    "policy": str(p),
                    "leaf_vertices": list(lg.origin),
                    "leaf_markers": _edges(lg.original_markers()),
                    "edge": list(lg.to_original(e)),
                })
    return VerdictReport("leaf_deletable", a.code, Status.PASS, stats={"leaves": leaves})


def verify_degree_preservation(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """Bricks with one marker edge keep the input degree of every vertex off it."""
    a = _ctx(g, ctx)
    if not a.bicritical or a.three_connected:
        return VerdictReport("degree_preservation", a.code, Status.VACUOUS)
    checked = 0
    for p, t in a.trees:
        for leaf in t.leaves():
            lg = leaf.labeled
            if lg.marker_count != 1:
                continue
            (mu, mv), = lg.markers
            for x in range(lg.graph.order):
                if x in (mu, mv):
                    continue
                checked += 1
                if lg.graph.degree(x) != g.degree(lg.origin[x]):
                    return VerdictReport("degree_preservation", a.code, Status.FAIL, {
                        "policy": str(p),
                        "leaf_vertices": list(lg.origin),
                        "leaf_markers": _edges(lg.original_markers()),
                        "vertex": lg.origin[x],
                        "leaf_degree": lg.graph.degree(x),
                        "root_degree": g.degree(lg.origin[x]),
                    })
    return VerdictReport("degree_preservation", a.code, Status.PASS, stats={"vertices": checked})


def probe_bicritical_is_brick(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    """Deliberately false: claims every bicritical graph is 3-connected."""
    a = _ctx(g, ctx)
    if not a.bicritical:
        return VerdictReport("all_bicritical_are_bricks", a.code, Status.VACUOUS)
    if a.three_connected:
        return VerdictReport("all_bicritical_are_bricks", a.code, Status.PASS)
    return VerdictReport("all_bicritical_are_bricks", a.code, Status.FAIL,
                         {"pair": list(a.separations[0])})


def probe_always_true(g: Graph, ctx: Analysis | None = None) -> VerdictReport:
    return VerdictReport("always_true", _ctx(g, ctx).code, Status.PASS)


# ---------------------------------------------------------------------------
# gluing instances


def verify_glue_equivalence(part1: Graph, pair1: Sequence[int], part2: Graph,
                            pair2: Sequence[int], with_edge: bool = False) -> VerdictReport:
    """The glued graph is bicritical iff both halves (each part plus ``uv``) are.

    ``part1`` and ``part2`` are the two edge-disjoint pieces sharing the pair;
    at most one may contain the pair as an edge.  ``with_edge`` adds ``uv`` to
    the glued graph without it belonging to either piece.
    """
    for part, pair in ((part1, pair1), (part2, pair2)):
        if part.order < 3 or not is_connected(part):
            raise GraphError("each part must be connected with at least three vertices")
    if part1.has_edge(*pair1) and part2.has_edge(*pair2):
        raise GraphError("the parts must be edge-disjoint")
    whole = glue(part1, pair1, part2, pair2, with_edge)
    half1 = part1 if part1.has_edge(*pair1) else part1.with_edge(*pair1)
    half2 = part2 if part2.has_edge(*pair2) else part2.with_edge(*pair2)
    b, b1, b2 = is_bicritical(whole), is_bicritical(half1), is_bicritical(half2)
    stats = {"whole": b, "halves": [b1, b2]}
    subject = emit_graph6(whole)
    if b == (b1 and b2):
        return VerdictReport("glue_equivalence", subject, Status.PASS, stats=stats)
    witness = {"halves": [emit_graph6(half1), emit_graph6(half2)], "pairs": [list(pair1), list(pair2)],
               "parts": [emit_graph6(part1), emit_graph6(part2)], "with_edge": with_edge}
    return VerdictReport("glue_equivalence", subject, Status.FAIL, witness, stats)


def verify_minimal_gluing(half1: Graph, edge1: Sequence[int], half2: Graph,
                          edge2: Sequence[int]) -> VerdictReport:
    """Gluing two minimal bicritical halves along their marker, with the marker
    dropped, gives a minimal bicritical graph."""
    part1 = half1.without_edge(*edge1)
    part2 = half2.without_edge(*edge2)
    whole = glue(part1, edge1, part2, edge2)
    subject = emit_graph6(whole)
    if not (is_connected(part1) and is_connected(part2)):
        return VerdictReport("minimal_gluing", subject, Status.VACUOUS, stats={"applicable": False})
    if not (is_minimal_k_factor_critical(half1, 2) and is_minimal_k_factor_critical(half2, 2)):
        return VerdictReport("minimal_gluing", subject, Status.VACUOUS, stats={"applicable": False})
    if is_bicritical(whole) and not deletable_edges(whole):
        return VerdictReport("minimal_gluing", subject, Status.PASS, stats={"applicable": True})
    return VerdictReport("minimal_gluing", subject, Status.FAIL,
                         {"halves": [emit_graph6(half1), emit_graph6(half2)],
                          "edges": [list(edge1), list(edge2)]})


def random_glue_instances(count: int, pool: Sequence[Graph], seed: int = 0):
    """Yield ``(part1, pair1, part2, pair2)`` tuples.

    Each part is a graph from ``pool`` with a random vertex pair.  When the
    pair is an edge, one randomly chosen part (or neither) keeps it so the
    parts stay edge-disjoint.  Disconnected parts are redrawn.
    """
    rng = random.Random(seed)
    made = 0
    while made < count:
        keeper = rng.randrange(3)
        parts = []
        for side in range(2):
            h = pool[rng.randrange(len(pool))]
            pair = tuple(sorted(rng.sample(range(h.order), 2)))
            if side != keeper and h.has_edge(*pair):
                h = h.without_edge(*pair)
            parts.append((h, pair))
        (h1, p1), (h2, p2) = parts
        if not (is_connected(h1) and is_connected(h2)):
            continue
        made += 1
        yield h1, p1, h2, p2


# ---------------------------------------------------------------------------
# registry


def _vacuous_on(exc, name):
    def wrap(fn):
        def run(a: Analysis) -> list[VerdictReport]:
            try:
                return fn(a)
            except exc:
                return [VerdictReport(name, a.code, Status.VACUOUS)]
        return run
    return wrap


@_vacuous_on(InapplicableError, "marker_leaves")
def _marker(a: Analysis):
    if not a.bicritical:
        return [VerdictReport("marker_leaves", a.code, Status.VACUOUS)]
    return [verify_marker_lemma(a.lex_tree)]


def _tree_counts(a: Analysis):
    if not a.bicritical:
        return [VerdictReport("tree_counts", a.code, Status.VACUOUS)]
    reports = [verify_tree_counts(t) for _, t in a.trees]
    bad = [r for r in reports if not r.passed]
    if bad:
        return bad[:1]
    return [VerdictReport("tree_counts", a.code, Status.PASS, stats={"trees": len(reports)})]


@_vacuous_on(NotBicriticalError, "decomposition_invariance")
def _invariance(a: Analysis):
    return [verify_decomposition_invariance(a.graph, a.trials, a.seed, a)]


def _transfer(a: Analysis):
    if not a.separations:
        return [VerdictReport("deletable_transfer", a.code, Status.VACUOUS)]
    total = {"absent": 0, "present": 0, "separations": len(a.separations)}
    for sep in a.separations:
        r = verify_deletable_transfer(a.graph, sep, a)
        if not r.passed:
            return [r]
        total["absent"] += r.stats["absent"]
        total["present"] += r.stats["present"]
    return [VerdictReport("deletable_transfer", a.code, Status.PASS, stats=total)]


@_vacuous_on(NotBicriticalError, "separation_properties")
def _separations(a: Analysis):
    return [verify_separation_properties(a.graph, a)]


@_vacuous_on(NotMinimalBicriticalError, "structural_exclusions")
def _structural(a: Analysis):
    return [verify_structural_exclusions(a.graph, a)]


CHECKS: dict[str, Callable[[Analysis], list[VerdictReport]]] = {
    "main_theorem": lambda a: [verify_main_theorem(a.graph, a)],
    "minimal_brick_cubics": lambda a: [verify_minimal_brick_cubics(a.graph, a)],
    "tree_counts": _tree_counts,
    "marker_leaves": _marker,
    "decomposition_invariance": _invariance,
    "split_children": lambda a: [verify_split_children(a.graph, a)],
    "separation_properties": _separations,
    "deletable_transfer": _transfer,
    "leaf_deletable": lambda a: [verify_leaf_deletable(a.graph, a)],
    "degree_preservation": lambda a: [verify_degree_preservation(a.graph, a)],
    "structural_exclusions": _structural,
    "min_degree": lambda a: [verify_min_degree(a.graph, 2, a)],
}

PROBES: dict[str, Callable[[Analysis], list[VerdictReport]]] = {
    "all_bicritical_are_bricks": lambda a: [probe_bicritical_is_brick(a.graph, a)],
    "always_true": lambda a: [probe_always_true(a.graph, a)],
}


def resolve_checks(names: Iterable[str] | str | None) -> list[str]:
    """Expand ``all`` and validate names against checks and probes."""
    if names is None:
        return list(CHECKS)
    if isinstance(names, str):
        names = [x for x in names.split(",") if x]
    out: list[str] = []
    for name in names:
        if name == "all":
            out.extend(c for c in CHECKS if c not in out)
        elif name in CHECKS or name in PROBES:
            if name not in out:
                out.append(name)
        else:
            raise KeyError(f"unknown check {name!r}")
    return out


def run_checks(g: Graph, names: Iterable[str] | None = None, trials: int = 10, seed: int = 0,
               ctx: Analysis | None = None) -> list[VerdictReport]:
    a = ctx if ctx is not None else Analysis(g, trials, seed)
    reports: list[VerdictReport] = []
    for name in resolve_checks(names):
        fn = CHECKS.get(name) or PROBES[name]
        reports.extend(fn(a))
    return reports


# ---------------------------------------------------------------------------
# independent witness recheck


def _node_edges(g_edges, node_vertices, node_markers):
    vs = set(node_vertices)
    own = {tuple(sorted(e)) for e in g_edges if e[0] in vs and e[1] in vs}
    return sorted(own | {tuple(sorted(e)) for e in node_markers})


def _side_graph(node_edges, side_vertices, pair):
    return oracle.induced_plus(node_edges, side_vertices, [tuple(pair)])


def recheck(report: VerdictReport) -> bool:
    """True iff the failure recorded in ``report`` is reproduced by brute force."""
    if report.status is not Status.FAIL:
        return False
    g = parse_graph6(report.subject)
    n, edges = g.order, g.edges()
    w = report.witness
    name = report.check
    deg = oracle.degrees(n, edges)

    if name == "main_theorem":
        return oracle.is_minimal_k_fc(n, edges, 2) and sum(d == 3 for d in deg) < 4
    if name == "minimal_brick_cubics":
        return oracle.is_minimal_brick(n, edges) and sum(d == 3 for d in deg) < 4
    if name == "min_degree":
        k = w["k"]
        return oracle.is_minimal_k_fc(n, edges, k) and min(deg) != k + 1
    if name == "structural_exclusions":
        if not oracle.is_minimal_k_fc(n, edges, 2):
            return False
        es = {frozenset(e) for e in edges}
        if "k33" in w:
            a, b = w["k33"]
            return len(set(a) | set(b)) == 6 and all(frozenset((x, y)) in es for x in a for y in b)
        hub, rim = w["hub"], w["rim"]
        ring = all(frozenset((rim[i], rim[(i + 1) % len(rim)])) in es for i in range(len(rim)))
        spokes = all(frozenset((hub, x)) in es for x in rim)
        is_wheel_itself = (
            len(rim) == n - 1 and len(edges) == 2 * (n - 1) and hub not in rim
        )
        return len(rim) >= 3 and len(set(rim)) == len(rim) and ring and spokes and not is_wheel_itself
    if name == "separation_properties":
        u, v = w["pair"]
        if not oracle.is_bicritical(n, edges) or oracle.connected(n, edges, (u, v)):
            return False
        kind = w["violation"]
        if kind == "odd_component":
            comp = w["component"]
            return len(comp) % 2 == 1 and _is_component(n, edges, (u, v), comp)
        if kind == "few_neighbours":
            comp, x = set(w["component"]), w["vertex"]
            nb = {b for a, b in edges if a == x} | {a for a, b in edges if b == x}
            return _is_component(n, edges, (u, v), sorted(comp)) and len(nb & comp) < 2
        rest = oracle.minus(edges, (u, v))
        if len(rest) == len(edges):
            return False
        if kind == "adjacent_not_deletable":
            return not oracle.is_bicritical(n, rest)
        if kind == "adjacent_not_removable":
            return not oracle.is_matching_covered(n, rest)
        if kind == "minimal_with_adjacent_separation":
            return oracle.is_minimal_k_fc(n, edges, 2)
        return False
    if name in ("deletable_transfer", "split_children"):
        node = _node_edges(edges, w["node_vertices"], w["node_markers"])
        idx = {x: i for i, x in enumerate(w["node_vertices"])}
        nn = len(w["node_vertices"])
        node_local = [(idx[a], idx[b]) for a, b in node]
        sn, side = _side_graph(node, w["side_vertices"], w["pair"])
        if not oracle.is_bicritical(nn, node_local):
            return False
        if name == "split_children" or w.get("violation") == "side_not_bicritical":
            return not oracle.is_bicritical(sn, side)
        sv = w["side_vertices"]
        de_node = {
            frozenset((w["node_vertices"][a], w["node_vertices"][b]))
            for a, b in node_local
            if oracle.is_bicritical(nn, oracle.minus(node_local, (a, b)))
        }
        de_side = {
            frozenset((sv[a], sv[b])) for a, b in side if oracle.is_bicritical(sn, oracle.minus(side, (a, b)))
        }
        uv = frozenset(w["pair"])
        present = any(frozenset(e) == uv for e in node)
        lhs = de_side | {uv} if present else de_side - {uv}
        side_edges = {frozenset((sv[a], sv[b])) for a, b in side}
        return lhs != (de_node & side_edges)
    if name in ("leaf_deletable", "degree_preservation"):
        lv = w["leaf_vertices"]
        ln, leaf = oracle.induced_plus(edges, lv, [tuple(e) for e in w["leaf_markers"]])
        if name == "degree_preservation":
            x = w["vertex"]
            ldeg = oracle.degrees(ln, leaf)[lv.index(x)]
            return len(w["leaf_markers"]) == 1 and ldeg != deg[x]
        if not oracle.is_minimal_k_fc(n, edges, 2):
            return False
        e = tuple(sorted((lv.index(w["edge"][0]), lv.index(w["edge"][1]))))
        markers = {frozenset(m) for m in w["leaf_markers"]}
        return frozenset(w["edge"]) not in markers and oracle.is_bicritical(ln, oracle.minus(leaf, e))
    if name == "decomposition_invariance":
        a, b = w["multisets"]
        return not _same_up_to_iso(a, b)
    if name in ("tree_counts", "marker_leaves"):
        lm = w.get("leaf_markers")
        s = w["splits"]
        if lm is None:
            return not (s == w["bricks"] - 1 and w["markers"] <= 2 * s)
        return sum(1 for x in lm if x == 1) < 2 or s != len(lm) - 1 or sum(lm) > 2 * s
    if name == "all_bicritical_are_bricks":
        return oracle.is_bicritical(n, edges) and not oracle.connected(n, edges, tuple(w["pair"]))
    if name == "glue_equivalence":
        halves = [parse_graph6(x) for x in w["halves"]]
        hb = [oracle.is_bicritical(h.order, h.edges()) for h in halves]
        return oracle.is_bicritical(n, edges) != (hb[0] and hb[1])
    if name == "minimal_gluing":
        return not oracle.is_minimal_k_fc(n, edges, 2)
    return False


def _is_component(n, edges, cut, comp) -> bool:
    comp = set(comp)
    inside = [e for e in edges if e[0] in comp and e[1] in comp]
    leaving = [e for e in edges if (e[0] in comp) != (e[1] in comp) and not (set(e) & set(cut))]
    idx = sorted(comp)
    local = [(idx.index(a), idx.index(b)) for a, b in inside]
    return not leaving and oracle.connected(len(idx), local)


def _same_up_to_iso(a: list[str], b: list[str]) -> bool:
    if len(a) != len(b):
        return False
    rest = [parse_graph6(x) for x in b]
    for code in a:
        g = parse_graph6(code)
        for i, h in enumerate(rest):
            if oracle.isomorphic(g.order, g.edges(), h.order, h.edges()):
                del rest[i]
                break
        else:
            return False
    return True
