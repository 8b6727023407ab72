"""graph6 and plain edge-list text codecs."""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph, GraphError, from_edge_list

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: list[int]) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("malformed length prefix")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise Graph6Error("malformed length prefix")
    n = 0
    for x in data[1:4]:
        n = (n << 6) | x
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  A leading ``>>graph6<<`` header is accepted."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside printable range 63..126")
    data = [ord(ch) - 63 for ch in s]
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"bit vector length mismatch: expected {(nbits + 5) // 6} bytes, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, adj)


def emit_graph6(g: Graph) -> str:
    n = g.order
    adj = g.adjacency
    out = [_encode_n(n)]
    acc = 0
    k = 0
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    graphs = list(iter_edgelists(text.splitlines()))
    if len(graphs) != 1:
        raise GraphError(f"expected one edge-list graph, found {len(graphs)}")
    return graphs[0]


def emit_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def iter_edgelists(lines: Iterable[str]) -> Iterator[Graph]:
    """Successive edge-list graphs from a line stream; blank lines ignored."""
    it = (ln.split() for ln in lines if ln.strip() and not ln.lstrip().startswith("#"))
    for head in it:
        if len(head) != 2:
            raise GraphError(f"bad edge-list header {' '.join(head)!r}")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise GraphError(f"bad edge-list header {' '.join(head)!r}") from None
        edges = []
        for _ in range(m):
            row = next(it, None)
            if row is None:
                raise GraphError("edge list truncated")
            if len(row) != 2:
                raise GraphError(f"bad edge line {' '.join(row)!r}")
            try:
                edges.append((int(row[0]), int(row[1])))
            except ValueError:
                raise GraphError(f"bad edge line {' '.join(row)!r}") from None
        yield from_edge_list(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for ln in lines:
        if ln.strip():
            yield parse_graph6(ln)


def read_graphs(stream: IO[str] | Iterable[str], fmt: str = "g6") -> Iterator[Graph]:
    if fmt in ("g6", "graph6"):
        return iter_graph6(stream)
    if fmt == "edgelist":
        return iter_edgelists(stream)
    raise ValueError(f"unknown graph format {fmt!r}")
