"""Graph serialization: graph6, DIMACS .col, and a plain edge-list format.

graph6 round-trips bit-exactly. The edge-list format is ``"n; u-v u-v ..."``
with 0-based endpoints; DIMACS is ``p edge n m`` with 1-based ``e u v`` lines.
"""

from __future__ import annotations

from .errors import GraphParseError
from .graph import Graph

FORMATS = ("graph6", "dimacs", "edge-list")


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edge-list":
        return _parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return _emit_graph6(g)
    if fmt == "dimacs":
        return _emit_dimacs(g)
    if fmt == "edge-list":
        return _emit_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


# -- graph6 -------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphParseError("empty graph6 input", offset=0)
    data = []
    for pos, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphParseError(f"invalid graph6 character {ch!r}", offset=pos)
        data.append(code - 63)

    if data[0] <= 62:
        n, idx = data[0], 1
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        idx = 8
    else:
        raise GraphParseError("truncated graph6 size field", offset=0)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - idx != need:
        raise GraphParseError(
            f"graph6 body has {len(data) - idx} groups, expected {need} for n={n}",
            offset=idx,
        )
    bits = []
    for d in data[idx:]:
        for shift in range(5, -1, -1):
            bits.append(d >> shift & 1)
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    if any(bits[nbits:]):
        raise GraphParseError("nonzero padding bits in graph6 body", offset=idx)
    return Graph(n, edges)


def _emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    elif n <= 68719476735:
        head = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    else:
        raise ValueError("graph too large for graph6")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


# -- DIMACS .col --------------------------------------------------------


def _parse_dimacs(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", line=lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise GraphParseError("malformed problem line, expected 'p edge n m'", line=lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphParseError("non-integer counts in problem line", line=lineno) from None
            if n < 0 or m < 0:
                raise GraphParseError("negative counts in problem line", line=lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", line=lineno)
            if len(fields) != 3:
                raise GraphParseError("malformed edge line, expected 'e u v'", line=lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError("non-integer endpoint", line=lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"endpoint out of range 1..{n}", line=lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", line=lineno)
            edge_lines += 1
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unknown line type {fields[0]!r}", line=lineno)
    if n is None:
        raise GraphParseError("missing problem line", line=1)
    if edge_lines != m:
        raise GraphParseError(f"problem line declares {m} edges, found {edge_lines}")
    return Graph(n, edges)


def _emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- edge list ----------------------------------------------------------


def _parse_edge_list(text: str) -> Graph:
    s = text.strip()
    sep = s.find(";")
    if sep < 0:
        raise GraphParseError("missing ';' after vertex count", offset=0)
    head = s[:sep].strip()
    try:
        n = int(head)
    except ValueError:
        raise GraphParseError(f"bad vertex count {head!r}", offset=0) from None
    if n < 0:
        raise GraphParseError("negative vertex count", offset=0)
    edges = []
    body = s[sep + 1:]
    col = sep + 1
    for token in body.split():
        offset = s.find(token, col)
        col = offset + len(token)
        parts = token.split("-")
        if len(parts) != 2:
            raise GraphParseError(f"bad edge token {token!r}", offset=offset)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {token!r}", offset=offset) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range 0..{n - 1} in {token!r}", offset=offset)
        if u == v:
            raise GraphParseError(f"self-loop in {token!r}", offset=offset)
        edges.append((u, v))
    return Graph(n, edges)


def _emit_edge_list(g: Graph) -> str:
    parts = [f"{g.n};"]
    parts.extend(f"{u}-{v}" for u, v in g.edges())
    return " ".join(parts)
