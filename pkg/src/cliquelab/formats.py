"""graph6 and DOT serialization.

graph6 layout: a size header followed by the strict upper triangle of the
adjacency matrix read column by column, ``(0,1), (0,2), (1,2), (0,3), ...``,
packed six bits per byte (most significant first) with 63 added to each
group.  Orders up to 62 use a one-byte header, orders up to 258047 use
``~`` followed by three bytes.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

from .errors import Graph6Error
from .graph import Graph, bits

__all__ = [
    "MAX_GRAPH6_ORDER",
    "emit_graph6",
    "parse_graph6",
    "emit_dot",
    "read_graph6_file",
    "write_graph6_file",
    "graph6_header",
    "pack_bits",
]

MAX_GRAPH6_ORDER = 258047
_HEADER_PREFIX = b">>graph6<<"


def graph6_header(n: int) -> bytes:
    if n < 0 or n > MAX_GRAPH6_ORDER:
        raise ValueError(f"graph6 supports orders 0..{MAX_GRAPH6_ORDER}, got {n}")
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def pack_bits(value: int, nbits: int) -> bytes:
    """Pack an MSB-first bit string of length ``nbits`` into graph6 bytes."""
    groups = -(-nbits // 6)
    value <<= groups * 6 - nbits
    return bytes(63 + (value >> (6 * (groups - 1 - k)) & 63) for k in range(groups))


def upper_triangle_bits(rows: Sequence[int]) -> int:
    """Column-major upper-triangle adjacency bits as one MSB-first integer."""
    value = 0
    for j in range(1, len(rows)):
        col = rows[j] & ((1 << j) - 1)
        # bit i of col must land at position j-1-i of this column's j bits
        rev = 0
        for i in bits(col):
            rev |= 1 << (j - 1 - i)
        value = (value << j) | rev
    return value


def emit_graph6(g: Graph) -> bytes:
    n = g.order
    return graph6_header(n) + pack_bits(upper_triangle_bits(g.rows), n * (n - 1) // 2)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record; a single trailing newline is tolerated."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.startswith(_HEADER_PREFIX):
        base = len(_HEADER_PREFIX)
        data = data[base:]
    else:
        base = 0
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        raise Graph6Error("empty graph6 record", base)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside 63..126", base + pos)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error(f"orders above {MAX_GRAPH6_ORDER} are not supported", base + 1)
        if len(data) < 4:
            raise Graph6Error("truncated size header", base + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    payload = data[pos:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: need {need} bytes, got {len(payload)}", base + len(data))
    if len(payload) > need:
        raise Graph6Error("trailing bytes after payload", base + pos + need)
    value = 0
    for byte in payload:
        value = (value << 6) | (byte - 63)
    value >>= need * 6 - nbits
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, rows)


def emit_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is not None and len(labels) != g.order:
        raise ValueError(f"expected {g.order} labels, got {len(labels)}")
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if labels is None:
            lines.append(f"  {v};")
        else:
            text = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def iter_graph6_lines(lines: Iterable[bytes]) -> Iterator[Graph]:
    for raw in lines:
        line = raw.strip()
        if line:
            yield parse_graph6(line)


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, "rb") as fh:
        return list(iter_graph6_lines(fh))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + b"\n")
            count += 1
    return count
