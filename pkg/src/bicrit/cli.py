"""Command-line entry point: ``bicrit analyze|decompose|scan|verify|hunt``.

Exit status is 0 when everything passed (or no counterexample was found),
1 when a check failed or a counterexample was found, and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Iterator

from .census import (
    _map,
    census,
    census_stream,
    default_workers,
    glue_census,
    hunt_counterexample,
)
from .codecs import emit_graph6, parse_graph6, read_graphs
from .criticality import NoPerfectMatchingError, NotBicriticalError, two_separations
from .decomposition import SeparationPolicy, brick_decomposition, brick_multiset, tree_counts, tree_to_dot
from .enumeration import MAX_BUILTIN_ORDER, connected_codes
from .graph import Graph, GraphError
from .matching import has_perfect_matching, removable_edges
from .verify import CHECKS, PROBES, Analysis, Status, resolve_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Unreadable or malformed input; maps to exit status 2."""


@dataclass
class RunConfig:
    command: str
    g6: str | None = None
    input: str | None = None
    stdin: bool = False
    format: str = "g6"
    policy: str = "lex"
    seed: int | None = None
    n_range: tuple[int, int] | None = None
    suite: str = "all"
    workers: int = 1
    trials: int = 10
    glue: int = 0
    dot: str | None = None
    report: str | None = None
    witnesses: str | None = None

    def __post_init__(self):
        if self.policy not in ("lex", "random"):
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.policy == "random" and self.seed is None:
            raise ValueError("--policy random needs --seed")
        if self.policy == "lex" and self.seed is not None and self.command == "decompose":
            raise ValueError("--seed only applies to --policy random")

    @property
    def separation_policy(self) -> SeparationPolicy:
        if self.policy == "random":
            return SeparationPolicy.seeded(self.seed)
        return SeparationPolicy.lexicographic()

    @property
    def has_input(self) -> bool:
        return bool(self.g6 or self.input or self.stdin)


def parse_range(text: str) -> tuple[int, int]:
    """``"4..8"`` -> ``(4, 8)``; a single number gives a one-order range."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order range {text!r}; expected MIN..MAX") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"bad order range {text!r}")
    return a, b


def iter_input(cfg: RunConfig) -> Iterator[Graph]:
    try:
        if cfg.g6 is not None:
            if cfg.format == "edgelist":
                yield from read_graphs(cfg.g6.replace(";", "\n").splitlines(), "edgelist")
            else:
                yield parse_graph6(cfg.g6)
            return
        if cfg.stdin:
            yield from read_graphs(sys.stdin, cfg.format)
            return
        with open(cfg.input) as fh:
            yield from read_graphs(fh, cfg.format)
    except (GraphError, ValueError) as exc:
        raise InputError(f"malformed graph: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# commands


def analyze_graph(g: Graph) -> dict:
    a = Analysis(g)
    if has_perfect_matching(g):
        seps = [list(s) for s in two_separations(g)]
    else:
        seps = None
    try:
        removable = [list(e) for e in sorted(removable_edges(g))]
    except GraphError:
        removable = None
    return {
        "graph6": emit_graph6(g),
        "order": g.order,
        "size": g.size,
        "degrees": list(g.degrees()),
        "cubic": len(a.cubic),
        "cubic_vertices": list(a.cubic),
        "bicritical": a.bicritical,
        "minimal": a.minimal,
        "deletable": None if a.deletable is None else [list(e) for e in sorted(a.deletable)],
        "removable": removable,
        "separations": 0 if seps is None else len(seps),
        "separation_pairs": seps,
        "three_connected": a.three_connected,
        "brick": a.brick_kind.value,
    }


def cmd_analyze(cfg: RunConfig) -> int:
    lines = [json.dumps(analyze_graph(g), sort_keys=True) for g in iter_input(cfg)]
    _write(cfg.report, "".join(ln + "\n" for ln in lines))
    return EXIT_OK


def cmd_decompose(cfg: RunConfig) -> int:
    records, dots = [], []
    for g in iter_input(cfg):
        try:
            t = brick_decomposition(g, cfg.separation_policy)
        except NotBicriticalError as exc:
            raise InputError(f"{emit_graph6(g)}: {exc}") from exc
        s, b, markers = tree_counts(t)
        records.append(json.dumps({
            "graph6": emit_graph6(g),
            "policy": str(t.policy),
            "s": s,
            "b": b,
            "markers": markers,
            "bricks": list(brick_multiset(t)),
            "splits": [list(x.split) for x in t.internal()],
        }, sort_keys=True))
        dots.append(tree_to_dot(t))
    _write(cfg.report, "".join(r + "\n" for r in records))
    if cfg.dot:
        _write(cfg.dot, "".join(dots))
    return EXIT_OK


def _orders(cfg: RunConfig) -> range:
    lo, hi = cfg.n_range
    if hi > MAX_BUILTIN_ORDER:
        raise InputError(f"built-in enumeration stops at order {MAX_BUILTIN_ORDER}; pipe a graph6 stream for n={hi}")
    return range(lo, hi + 1)


def cmd_scan(cfg: RunConfig) -> int:
    if cfg.has_input:
        codes = (emit_graph6(g) for g in iter_input(cfg))
        report = census_stream(codes, cfg.suite, cfg.workers, cfg.trials, cfg.seed or 0)
        if cfg.glue:
            report.glue = glue_census(cfg.glue, cfg.seed or 0)
    else:
        report = census(_orders(cfg), cfg.suite, cfg.workers, cfg.trials, cfg.seed or 0, cfg.glue)
    _write(cfg.report, report.to_text())
    if cfg.witnesses:
        _write(cfg.witnesses, "".join(c + "\n" for c in report.witnesses()))
    for f in report.failures:
        print(f"FAIL {f['check']} {f['subject']}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _verify_one(code: str, names: list[str], trials: int, seed: int, candidates_only: bool) -> list[str]:
    g = parse_graph6(code)
    if candidates_only and (g.order < 4 or g.order & 1 or g.min_degree() < 3):
        return []
    a = Analysis(g, trials, seed)
    out = []
    for name in names:
        out.extend(r.to_record() for r in (CHECKS.get(name) or PROBES[name])(a))
    return out


def cmd_verify(cfg: RunConfig) -> int:
    names = resolve_checks(cfg.suite)
    if cfg.has_input:
        codes = [emit_graph6(g) for g in iter_input(cfg)]
        candidates_only = False
    else:
        codes = [c for n in _orders(cfg) for c in connected_codes(n)]
        candidates_only = True
    fn = partial(_verify_one, names=names, trials=cfg.trials, seed=cfg.seed or 0,
                 candidates_only=candidates_only)
    lines: list[str] = []
    tally = {s.value: 0 for s in Status}
    for recs in _map(fn, codes, cfg.workers):
        for rec in recs:
            lines.append(rec)
            tally[json.loads(rec)["status"]] += 1
    _write(cfg.report, "".join(ln + "\n" for ln in lines))
    print(json.dumps({"graphs": len(codes), **tally}, sort_keys=True), file=sys.stderr)
    return EXIT_FAIL if tally["fail"] else EXIT_OK


def cmd_hunt(cfg: RunConfig) -> int:
    names = [x for x in cfg.suite.split(",") if x]
    if len(names) != 1 or names[0] == "all":
        raise InputError("hunt needs exactly one predicate name in --suite")
    lo, hi = cfg.n_range
    _orders(cfg)
    found = hunt_counterexample(names[0], hi, cfg.workers, lo, cfg.trials, cfg.seed or 0)
    _write(cfg.report, (found.to_record() if found else "none") + "\n")
    return EXIT_FAIL if found else EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "hunt": cmd_hunt,
}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bicrit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input):
        src = sp.add_mutually_exclusive_group(required=needs_input)
        src.add_argument("--input", metavar="PATH", help="read graphs from a file")
        src.add_argument("--g6", metavar="STRING", help="a single graph given inline")
        src.add_argument("--stdin", action="store_true", help="read graphs from standard input")
        sp.add_argument("--format", choices=("g6", "graph6", "edgelist"), default="g6")
        sp.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")

    def batch(sp):
        sp.add_argument("--n", dest="n_range", type=parse_range, metavar="MIN..MAX")
        sp.add_argument("--n-max", type=int, metavar="N", help="shorthand for --n 1..N")
        sp.add_argument("--suite", default="all", metavar="NAME[,NAME...]")
        sp.add_argument("--workers", type=int, default=None, metavar="N")
        sp.add_argument("--seed", type=int, default=None, metavar="N")
        sp.add_argument("--trials", type=int, default=10, metavar="N",
                        help="seeded random decompositions per graph")

    sp = sub.add_parser("analyze", help="structural report per graph")
    common(sp, True)

    sp = sub.add_parser("decompose", help="brick decomposition tree")
    common(sp, True)
    sp.add_argument("--policy", choices=("lex", "random"), default="lex")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--dot", metavar="PATH", help="write the tree as DOT")

    sp = sub.add_parser("scan", help="census over enumerated graphs or a graph6 stream")
    common(sp, False)
    batch(sp)
    sp.add_argument("--witnesses", metavar="PATH", help="graph6 sidecar of reported witnesses")
    sp.add_argument("--glue", type=int, default=0, metavar="N", help="random glue instances to check")

    sp = sub.add_parser("verify", help="verdict stream for the selected checks")
    common(sp, False)
    batch(sp)

    sp = sub.add_parser("hunt", help="first counterexample to one predicate")
    batch(sp)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    d = vars(ns).copy()
    n_max = d.pop("n_max", None)
    if d.get("n_range") is None and n_max is not None:
        if n_max < 1:
            raise ValueError("--n-max must be positive")
        d["n_range"] = (1, n_max)
    if d.get("workers") is None:
        d["workers"] = default_workers()
    if d.get("workers", 1) < 1:
        raise ValueError("--workers must be positive")
    if d.get("format") == "graph6":
        d["format"] = "g6"
    cfg = RunConfig(**{k: v for k, v in d.items() if k in RunConfig.__dataclass_fields__})
    if cfg.command in ("scan", "verify") and not cfg.has_input and cfg.n_range is None:
        raise ValueError(f"{cfg.command} needs --n, --n-max or an input source")
    if cfg.command == "hunt" and cfg.n_range is None:
        raise ValueError("hunt needs --n or --n-max")
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return COMMANDS[cfg.command](cfg)
    except KeyError as exc:
        print(f"bicrit: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, NoPerfectMatchingError) as exc:
        print(f"bicrit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
