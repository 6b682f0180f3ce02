"""Eulerian, Hamiltonian and planarity predicates.

Hamiltonicity and planarity are exhaustive searches with explicit budgets;
when a budget runs out they answer :attr:`Decision.INCONCLUSIVE` instead of
guessing.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations

from .cliques import Decision
from .graph import Graph, bits, components

__all__ = [
    "DEFAULT_HAMILTON_BUDGET",
    "DEFAULT_PLANAR_ORDER_CAP",
    "DEFAULT_PLANAR_BUDGET",
    "is_eulerian",
    "is_hamiltonian",
    "find_hamiltonian_cycle",
    "is_planar",
    "find_kuratowski_subdivision",
    "PlanarityResult",
]

DEFAULT_HAMILTON_BUDGET = 10**7
DEFAULT_PLANAR_ORDER_CAP = 16
DEFAULT_PLANAR_BUDGET = 1_000_000


class _BudgetExhausted(Exception):
    pass


def is_eulerian(g: Graph) -> bool:
    """At least one edge, all degrees even, and all edges in one component."""
    if g.size == 0:
        return False
    if any(r.bit_count() % 2 for r in g.rows):
        return False
    return sum(1 for comp in components(g) if comp.bit_count() > 1) == 1


def find_hamiltonian_cycle(
    g: Graph, node_budget: int = DEFAULT_HAMILTON_BUDGET
) -> tuple[Decision, list[int] | None]:
    n = g.order
    if n < 3:
        return Decision.FALSE, None
    rows = g.rows
    if any(r.bit_count() < 2 for r in rows) or len(components(g)) != 1:
        return Decision.FALSE, None
    full = (1 << n) - 1
    path = [0]
    nodes = 0

    def extend(v: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        if visited == full:
            return bool(rows[v] & 1)
        unvisited = full & ~visited
        # every unvisited vertex still needs two usable neighbours
        # (vertex 0 and the current end count as usable)
        usable = unvisited | 1 | (1 << v)
        for w in bits(unvisited):
            if (rows[w] & usable).bit_count() < 2:
                return False
        options = sorted(bits(rows[v] & unvisited), key=lambda u: ((rows[u] & unvisited).bit_count(), u))
        for u in options:
            path.append(u)
            if extend(u, visited | (1 << u)):
                return True
            path.pop()
        return False

    old = sys.getrecursionlimit()
    if old < n + 200:
        sys.setrecursionlimit(n + 200)
    try:
        found = extend(0, 1)
    except _BudgetExhausted:
        return Decision.INCONCLUSIVE, None
    finally:
        sys.setrecursionlimit(old)
    return (Decision.TRUE, list(path)) if found else (Decision.FALSE, None)


def is_hamiltonian(g: Graph, node_budget: int = DEFAULT_HAMILTON_BUDGET) -> Decision:
    return find_hamiltonian_cycle(g, node_budget)[0]


# ---------------------------------------------------------------------------
# planarity via Kuratowski subdivisions


@dataclass(frozen=True)
class PlanarityResult:
    decision: Decision
    # subdivision witness: kind "K5" or "K3,3", branch vertices, and one
    # vertex path per subdivided edge (original vertex ids)
    kind: str | None = None
    branch: tuple[int, ...] | None = None
    paths: tuple[tuple[int, ...], ...] | None = None
    reason: str | None = None

    def witness(self) -> dict | None:
        if self.kind is None:
            return None
        return {"kind": self.kind, "branch": list(self.branch), "paths": [list(p) for p in self.paths]}


class _Reduced:
    """Graph with degree <= 2 vertices removed or smoothed away.

    ``expand[(a, b)]`` (``a < b``) lists the original vertices hidden inside
    the edge ``a - b``, ordered from ``a`` to ``b``.
    """

    def __init__(self, g: Graph) -> None:
        adj = {v: set(g.neighbors(v)) for v in range(g.order)}
        expand: dict[tuple[int, int], list[int]] = {}

        def hidden(a, b):
            key = (a, b) if a < b else (b, a)
            inner = expand.get(key, [])
            return list(inner) if a < b else list(reversed(inner))

        changed = True
        while changed:
            changed = False
            for v in sorted(adj):
                if v not in adj:
                    continue
                d = len(adj[v])
                if d <= 1:
                    for u in adj[v]:
                        adj[u].discard(v)
                    del adj[v]
                    changed = True
                elif d == 2:
                    a, b = sorted(adj[v])
                    via = hidden(a, v) + [v] + hidden(v, b)
                    for u in (a, b):
                        adj[u].discard(v)
                        expand.pop((min(u, v), max(u, v)), None)
                    del adj[v]
                    if b not in adj[a]:
                        adj[a].add(b)
                        adj[b].add(a)
                        expand[(a, b)] = via
                    changed = True
        self.adj = adj
        self.expand = expand

    def unfold(self, route: list[int]) -> tuple[int, ...]:
        out = [route[0]]
        for a, b in zip(route, route[1:]):
            key = (a, b) if a < b else (b, a)
            inner = self.expand.get(key, [])
            out.extend(inner if a < b else reversed(inner))
            out.append(b)
        return tuple(out)


class _Router:
    def __init__(self, adj: dict[int, set[int]], budget: int) -> None:
        self.adj = adj
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted

    def _slack(self, pending, used, branch) -> dict[int, int] | None:
        """Spare exits per branch vertex; ``None`` if some vertex is short."""
        need: dict[int, int] = {}
        partners: dict[int, set[int]] = {}
        for a, b in pending:
            need[a] = need.get(a, 0) + 1
            need[b] = need.get(b, 0) + 1
            partners.setdefault(a, set()).add(b)
            partners.setdefault(b, set()).add(a)
        slack = {}
        for x, k in need.items():
            exits = sum(1 for w in self.adj[x] if (w not in used and w not in branch) or w in partners[x])
            if exits < k:
                return None
            slack[x] = exits - k
        return slack

    def route(self, pending: list[tuple[int, int]], used: set[int], branch: set[int], done: list):
        if not pending:
            return True
        self.tick()
        slack = self._slack(pending, used, branch)
        if slack is None:
            return False
        direct = [p for p in pending if p[1] in self.adj[p[0]]]
        if direct:
            pick = direct[0]
        else:
            pick = min(pending, key=lambda p: (min(slack[p[0]], slack[p[1]]), p))
        a, b = pick
        rest = [p for p in pending if p != pick]
        if b in self.adj[a]:
            done.append([a, b])
            if self.route(rest, used, branch, done):
                return True
            done.pop()
            return False
        # enumerate simple a-b paths through free vertices
        stack_path = [a]

        def walk(v):
            for w in sorted(self.adj[v]):
                if w == b:
                    if len(stack_path) < 2:
                        continue
                    done.append(stack_path + [b])
                    if self.route(rest, used, branch, done):
                        return True
                    done.pop()
                elif w not in used and w not in branch:
                    self.tick()
                    used.add(w)
                    stack_path.append(w)
                    if walk(w):
                        return True
                    stack_path.pop()
                    used.discard(w)
            return False

        return walk(a)


def _blocks(adj: dict[int, set[int]]) -> list[set[int]]:
    """Vertex sets of the biconnected components (Hopcroft-Tarjan)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[set[int]] = []
    stack: list[tuple[int, int]] = []
    counter = 0
    for root in sorted(adj):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        work = [(root, -1, iter(sorted(adj[root])))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((v, w))
                    work.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= index[parent]:
                    comp: set[int] = set()
                    while True:
                        e = stack.pop()
                        comp.update(e)
                        if e == (parent, v):
                            break
                    out.append(comp)
    return out


def _search_subdivision(red: _Reduced, budget: int):
    router = _Router(red.adj, budget)
    for block in _blocks(red.adj):
        if len(block) < 5:
            continue
        adj = {v: red.adj[v] & block for v in block}
        router.adj = adj
        found = _search_block(adj, router)
        if found is not None:
            return found
    return None


def _search_block(adj, router):
    verts = sorted(adj)
    deg4 = [v for v in verts if len(adj[v]) >= 4]
    for branch in combinations(deg4, 5):
        pending = list(combinations(branch, 2))
        pending.sort(key=lambda p: p[1] not in adj[p[0]])
        done: list = []
        if router.route(pending, set(), set(branch), done):
            return "K5", branch, done
    deg3 = [v for v in verts if len(adj[v]) >= 3]
    for six in combinations(deg3, 6):
        first = six[0]
        for others in combinations(six[1:], 2):
            side_a = (first,) + others
            side_b = tuple(v for v in six if v not in side_a)
            pending = [(x, y) for x in side_a for y in side_b]
            pending.sort(key=lambda p: p[1] not in adj[p[0]])
            done = []
            if router.route(pending, set(), set(six), done):
                return "K3,3", side_a + side_b, done
    return None


def find_kuratowski_subdivision(
    g: Graph,
    order_cap: int = DEFAULT_PLANAR_ORDER_CAP,
    node_budget: int = DEFAULT_PLANAR_BUDGET,
) -> PlanarityResult:
    n = g.order
    if n > order_cap:
        return PlanarityResult(Decision.INCONCLUSIVE, reason=f"order {n} exceeds planarity cap {order_cap}")
    too_dense = n >= 3 and g.size > 3 * n - 6
    red = _Reduced(g)
    try:
        found = _search_subdivision(red, node_budget)
    except _BudgetExhausted:
        if too_dense:
            return PlanarityResult(Decision.FALSE, reason=f"{g.size} edges exceed 3n-6 = {3 * n - 6}")
        return PlanarityResult(Decision.INCONCLUSIVE, reason=f"subdivision search exceeded {node_budget} nodes")
    if found is None:
        if too_dense:
            raise AssertionError("dense graph without a Kuratowski subdivision")
        return PlanarityResult(Decision.TRUE)
    kind, branch, routes = found
    paths = tuple(red.unfold(r) for r in routes)
    return PlanarityResult(Decision.FALSE, kind, tuple(branch), paths)


def is_planar(
    g: Graph,
    order_cap: int = DEFAULT_PLANAR_ORDER_CAP,
    node_budget: int = DEFAULT_PLANAR_BUDGET,
) -> Decision:
    n = g.order
    if n > order_cap:
        return Decision.INCONCLUSIVE
    if n >= 3 and g.size > 3 * n - 6:
        return Decision.FALSE
    return find_kuratowski_subdivision(g, order_cap, node_budget).decision
