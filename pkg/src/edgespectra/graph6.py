"""graph6 encoding and decoding.

Bit layout follows the format description shipped with nauty: the vertex
count N(n) is followed by the upper triangle of the adjacency matrix read
column by column, (0,1), (0,2), (1,2), (0,3), ..., packed big-endian six
bits per byte with 63 added.
"""

from __future__ import annotations

from .graph import Graph, GraphError

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"vertex count {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated long-form vertex count")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated vertex count")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="strict")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} at offset {i} outside the printable range 63..126")
    n, used = _decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise Graph6Error(f"{kind} bit field: expected {need} bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(b << (5 - t) for t, b in enumerate(bits[k : k + 6]))
        for k in range(0, len(bits), 6)
    )
    return (_encode_n(n) + body).decode("ascii")
