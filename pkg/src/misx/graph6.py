"""graph6 encoding as used by nauty/geng catalogs.

Only the undirected, simple-graph format is handled (no sparse6/digraph6).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = b">>graph6<<"
MAX_N = 258047


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


def _as_bytes(line: bytes | str) -> bytes:
    if isinstance(line, str):
        try:
            return line.encode("ascii")
        except UnicodeEncodeError:
            pos = next(i for i, ch in enumerate(line) if ord(ch) > 127)
            raise Graph6Error("non-ASCII character", pos) from None
    return bytes(line)


def parse_graph6(line: bytes | str) -> Graph:
    data = _as_bytes(line).rstrip(b"\r\n")
    start = 0
    if data.startswith(HEADER):
        start = len(HEADER)
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte value {data[i]} outside 63..126", i)
    if start == len(data):
        raise Graph6Error("empty record", start)
    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        if len(data) >= pos + 2 and data[pos + 1] == 126:
            raise Graph6Error("8-byte size field (n > 258047) not supported", pos)
        if len(data) < pos + 4:
            raise Graph6Error("truncated size field", len(data))
        n = 0
        for b in data[pos + 1 : pos + 4]:
            n = n << 6 | (b - 63)
        if n < 63:
            raise Graph6Error(f"non-canonical 4-byte size field for n={n}", pos)
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph data", pos + need)
    adj = [0] * n
    k = 0
    u, v = 0, 1  # bit k describes pair (u, v), column-major over the upper triangle
    for idx, byte in enumerate(body):
        val = byte - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("nonzero padding bits", pos + idx)
                continue
            if val >> shift & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> bytes:
    n = g.n
    if n > MAX_N:
        raise Graph6Error(f"n={n} above supported maximum {MAX_N}")
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    acc = 0
    filled = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out)


def iter_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank record.

    Parse failures are yielded rather than raised so a catalog scan can
    report the bad line and keep going.
    """
    for lineno, raw in enumerate(lines, 1):
        rec = _as_bytes(raw).strip() if isinstance(raw, bytes) else raw.strip()
        if not rec:
            continue
        try:
            yield lineno, parse_graph6(rec)
        except Graph6Error as exc:
            yield lineno, exc
