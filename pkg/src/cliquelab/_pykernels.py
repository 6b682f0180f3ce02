"""Pure-Python hot kernels.

The compiled ``_kernels`` extension implements the same three functions
with identical results; this module is the fallback when it is missing.

* ``maximal_cliques``: Bron-Kerbosch with Tomita pivoting over bitmask rows.
* ``intersection_rows``: adjacency rows of the intersection graph of a set
  family (the clique graph when the family is the clique family).
* ``canonical_labeling``: individualization/refinement search for the
  labeling whose graph6 encoding is lexicographically smallest, pruned by
  the automorphisms discovered along the way.
"""

from __future__ import annotations

import sys
from collections import deque
from collections.abc import Sequence

from .errors import CanonicalLimitExceeded, CliqueLimitExceeded

NAME = "python"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(n: int, rows: Sequence[int], limit: int) -> list[tuple[int, ...]]:
    """All maximal cliques as sorted vertex tuples, in discovery order."""
    found: list[int] = []
    if n == 0:
        return []
    rows = list(rows)
    old_limit = sys.getrecursionlimit()
    if old_limit < n + 200:
        sys.setrecursionlimit(n + 200)

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                found.append(r)
                if len(found) > limit:
                    raise CliqueLimitExceeded(limit, len(found))
            return
        best = -1
        pivot_row = 0
        for u in _bits(p | x):
            c = (p & rows[u]).bit_count()
            if c > best:
                best = c
                pivot_row = rows[u]
        for v in _bits(p & ~pivot_row):
            nv = rows[v]
            bit = 1 << v
            expand(r | bit, p & nv, x & nv)
            p &= ~bit
            x |= bit

    try:
        expand(0, (1 << n) - 1, 0)
    finally:
        sys.setrecursionlimit(old_limit)
    return [tuple(_bits(c)) for c in found]


def intersection_rows(n_vertices: int, family: Sequence[Sequence[int]]) -> list[int]:
    """Row ``i`` has bit ``j`` set iff members ``i != j`` of ``family`` intersect."""
    incidence = [0] * n_vertices
    for idx, members in enumerate(family):
        bit = 1 << idx
        for v in members:
            incidence[v] |= bit
    out = []
    for idx, members in enumerate(family):
        row = 0
        for v in members:
            row |= incidence[v]
        out.append(row & ~(1 << idx))
    return out


# ---------------------------------------------------------------------------
# canonical labeling
#
# An ordered partition is kept as ``lab`` (vertices in cell order) and
# ``cell_end`` (for each cell start position, the end position).  Every
# decision depends only on positions and neighbour counts, never on vertex
# ids, so the search tree of an isomorphic copy is an isomorphic tree.


def _refine(rows, n, lab, cell_end, splitters) -> None:
    queue = deque(splitters)
    queued = set(splitters)
    while queue:
        ws = queue.popleft()
        queued.discard(ws)
        wmask = 0
        for i in range(ws, cell_end[ws]):
            wmask |= 1 << lab[i]
        s = 0
        while s < n:
            e = cell_end[s]
            if e - s > 1:
                counts = [(rows[lab[i]] & wmask).bit_count() for i in range(s, e)]
                lo = min(counts)
                if lo != max(counts):
                    order = sorted(range(e - s), key=counts.__getitem__)
                    segment = [lab[s + k] for k in order]
                    lab[s:e] = segment
                    start = s
                    prev = counts[order[0]]
                    for pos in range(1, e - s):
                        c = counts[order[pos]]
                        if c != prev:
                            cell_end[start] = s + pos
                            if start not in queued:
                                queue.append(start)
                                queued.add(start)
                            start = s + pos
                            prev = c
                    cell_end[start] = e
                    if start not in queued:
                        queue.append(start)
                        queued.add(start)
            s = e


def _leaf_code(rows, n, lab) -> bytes:
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    value = 0
    for j in range(1, n):
        col = 0
        for u in _bits(rows[lab[j]]):
            i = pos[u]
            if i < j:
                col |= 1 << (j - 1 - i)
        value = (value << j) | col
    nbits = n * (n - 1) // 2
    groups = -(-nbits // 6)
    value <<= groups * 6 - nbits
    payload = bytes(63 + (value >> (6 * (groups - 1 - k)) & 63) for k in range(groups))
    if n <= 62:
        header = bytes([63 + n])
    else:
        header = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return header + payload


class _Search:
    def __init__(self, rows, n, node_limit):
        self.rows = rows
        self.n = n
        self.node_limit = node_limit
        self.nodes = 0
        self.first = None  # (code, lab, path)
        self.best = None
        self.generators: list[list[int]] = []

    def _orbit_rep_seen(self, v, explored, path) -> bool:
        gens = [g for g in self.generators if all(g[p] == p for p in path)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for g in gens:
                u = g[w]
                if u not in orbit:
                    orbit.add(u)
                    frontier.append(u)
        return any(x in orbit for x in explored)

    def _automorphism(self, other_lab, lab) -> list[int]:
        perm = [0] * self.n
        for a, b in zip(other_lab, lab):
            perm[a] = b
        return perm

    def visit(self, lab, cell_end, path):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise CanonicalLimitExceeded(
                f"canonical search exceeded {self.node_limit} nodes on a graph of order {self.n}")
        n = self.n
        s = 0
        while s < n and cell_end[s] - s == 1:
            s = cell_end[s]
        if s == n:
            code = _leaf_code(self.rows, n, lab)
            if self.first is None:
                self.first = self.best = (code, list(lab), list(path))
                return None
            for ref in (self.first, self.best):
                if code == ref[0]:
                    self.generators.append(self._automorphism(ref[1], lab))
                    c = 0
                    other = ref[2]
                    while path[c] == other[c]:
                        c += 1
                    return c
            if code < self.best[0]:
                self.best = (code, list(lab), list(path))
            return None
        e = cell_end[s]
        depth = len(path)
        explored: list[int] = []
        for v in sorted(lab[s:e]):
            if explored and self._orbit_rep_seen(v, explored, path):
                continue
            explored.append(v)
            child_lab = list(lab)
            child_end = list(cell_end)
            k = child_lab.index(v, s, e)
            child_lab[s], child_lab[k] = child_lab[k], child_lab[s]
            child_end[s] = s + 1
            child_end[s + 1] = e
            _refine(self.rows, n, child_lab, child_end, [s])
            path.append(v)
            jump = self.visit(child_lab, child_end, path)
            path.pop()
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(n: int, rows: Sequence[int], node_limit: int) -> tuple[list[int], bytes]:
    """Return ``(lab, code)``: canonical position order and its graph6 bytes.

    Vertex ``lab[i]`` receives canonical label ``i``.
    """
    rows = list(rows)
    if n == 0:
        return [], bytes([63])
    lab = list(range(n))
    cell_end = [0] * n
    cell_end[0] = n
    _refine(rows, n, lab, cell_end, [0])
    search = _Search(rows, n, node_limit)
    old_limit = sys.getrecursionlimit()
    if old_limit < 2 * n + 200:
        sys.setrecursionlimit(2 * n + 200)
    try:
        search.visit(lab, cell_end, [])
    finally:
        sys.setrecursionlimit(old_limit)
    code, best_lab, _ = search.best
    return best_lab, code
