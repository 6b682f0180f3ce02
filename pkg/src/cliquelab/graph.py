"""Finite simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is stored as one Python ``int`` bitmask per vertex: bit ``v`` of
``rows[u]`` is set iff ``u`` and ``v`` are adjacent.  Graphs are immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import GraphError

__all__ = [
    "Graph",
    "new_graph",
    "from_rows",
    "standard_family",
    "complete",
    "empty",
    "path",
    "cycle",
    "star",
    "join",
    "cartesian_product",
    "disjoint_union",
    "complement",
    "induced_subgraph",
    "is_complete",
    "has_universal_vertex",
    "is_connected",
    "components",
    "bits",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("order", "rows")

    order: int
    rows: tuple[int, ...]

    def __init__(self, order: int, rows: Sequence[int]) -> None:
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.order, self.rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"

    def __reduce__(self):
        return (Graph, (self.order, self.rows))

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v


def from_rows(rows: Sequence[int]) -> Graph:
    """Build a graph from bitmask rows, validating symmetry and looplessness."""
    n = len(rows)
    full = (1 << n) - 1
    for u, row in enumerate(rows):
        if row < 0 or row & ~full:
            raise GraphError(f"row {u} references a vertex outside 0..{n - 1}")
        if row >> u & 1:
            raise GraphError(f"self-loop at vertex {u}")
        for v in bits(row):
            if not rows[v] >> u & 1:
                raise GraphError(f"adjacency not symmetric for pair ({u}, {v})")
    return Graph(n, rows)


def new_graph(order: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Graph on ``order`` vertices with the given edges.

    Duplicate edges and both orientations collapse to a single edge.
    Out-of-range endpoints and self-loops raise :class:`GraphError`.
    """
    if order < 0:
        raise GraphError(f"order must be non-negative, got {order}")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, rows)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    return new_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return new_graph(n, [(v, (v + 1) % n) for v in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with center 0."""
    return new_graph(n, [(0, v) for v in range(1, n)])


_FAMILIES = {
    "complete": complete,
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "star": star,
}


def standard_family(kind: str, n: int) -> Graph:
    if kind not in _FAMILIES:
        raise GraphError(f"unknown family {kind!r}; choose from {sorted(_FAMILIES)}")
    if n < 1:
        raise GraphError(f"family graphs need n >= 1, got {n}")
    return _FAMILIES[kind](n)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union with every cross edge; ``g1`` keeps ids ``0..n1-1``."""
    n1, n2 = g1.order, g2.order
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    rows = [r | high for r in g1.rows] + [(r << n1) | low for r in g2.rows]
    return Graph(n1 + n2, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.order
    return Graph(n1 + g2.order, list(g1.rows) + [r << n1 for r in g2.rows])


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(i, j)`` gets id ``i * n2 + j``."""
    n1, n2 = g1.order, g2.order
    rows = []
    for i in range(n1):
        for j in range(n2):
            row = g2.rows[j] << (i * n2)
            for k in bits(g1.rows[i]):
                row |= 1 << (k * n2 + j)
            rows.append(row)
    return Graph(n1 * n2, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled ``0..k-1`` in the given order."""
    index = {}
    for pos, v in enumerate(vertices):
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} outside 0..{g.order - 1}")
        if v in index:
            raise GraphError(f"vertex {v} listed twice")
        index[v] = pos
    rows = []
    for v in vertices:
        row = 0
        for u in bits(g.rows[v]):
            pos = index.get(u)
            if pos is not None:
                row |= 1 << pos
        rows.append(row)
    return Graph(len(vertices), rows)


def is_complete(g: Graph) -> bool:
    n = g.order
    return all(r.bit_count() == n - 1 for r in g.rows)


def has_universal_vertex(g: Graph) -> bool:
    # K1 counts: its vertex has degree 0 = n - 1.
    n = g.order
    return any(r.bit_count() == n - 1 for r in g.rows)


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    remaining = (1 << g.order) - 1
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1
