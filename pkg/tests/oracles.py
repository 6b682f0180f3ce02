"""Independent reference implementations used as test oracles.

Nothing here calls into the library's algorithms; only the ``Graph``
container is shared so results can be compared directly.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx


def edge_set(g) -> set[tuple[int, int]]:
    return {(u, v) for u in range(g.order) for v in range(u + 1, g.order) if g.rows[u] >> v & 1}


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(edge_set(g))
    return h


def subset_cliques(g) -> list[tuple[int, ...]]:
    """Maximal cliques by filtering all vertex subsets."""
    n = g.order
    edges = edge_set(g)

    def complete(s):
        return all((a, b) in edges for a, b in combinations(s, 2))

    found = [set(s) for k in range(1, n + 1) for s in combinations(range(n), k) if complete(s)]
    maximal = [s for s in found if not any(s < t for t in found)]
    return sorted(tuple(sorted(s)) for s in maximal)


def pairwise_intersection_edges(family) -> set[tuple[int, int]]:
    sets = [set(c) for c in family]
    return {(i, j) for i, j in combinations(range(len(sets)), 2) if sets[i] & sets[j]}


def permutation_isomorphic(g1, g2) -> bool:
    if g1.order != g2.order:
        return False
    e1, e2 = edge_set(g1), edge_set(g2)
    if len(e1) != len(e2):
        return False
    for perm in permutations(range(g1.order)):
        if all(tuple(sorted((perm[u], perm[v]))) in e2 for u, v in e1):
            return True
    return False


def relabel(g, perm):
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    from cliquelab import new_graph

    return new_graph(g.order, [(perm[u], perm[v]) for u, v in edge_set(g)])


def hierholzer_circuit(g) -> list[int] | None:
    """An Euler circuit covering every edge, or ``None`` when none exists."""
    edges = edge_set(g)
    if not edges:
        return None
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    remaining = {v: list(ns) for v, ns in adj.items()}
    used: set[frozenset] = set()
    stack, circuit = [start], []
    while stack:
        v = stack[-1]
        while remaining[v] and frozenset((v, remaining[v][-1])) in used:
            remaining[v].pop()
        if remaining[v]:
            w = remaining[v].pop()
            used.add(frozenset((v, w)))
            stack.append(w)
        else:
            circuit.append(stack.pop())
    # On non-Eulerian input the popped sequence is not a trail; verify it.
    steps = [frozenset(p) for p in zip(circuit, circuit[1:])]
    if circuit[0] != circuit[-1] or len(steps) != len(edges) or set(steps) != used or len(used) != len(edges):
        return None
    return circuit


def permutation_hamiltonian(g) -> bool:
    n = g.order
    if n < 3:
        return False
    edges = edge_set(g)
    adj = lambda a, b: (min(a, b), max(a, b)) in edges  # noqa: E731
    for perm in permutations(range(1, n)):
        cycle = (0,) + perm
        if all(adj(cycle[i], cycle[(i + 1) % n]) for i in range(n)):
            return True
    return False


def helly_by_definition(g) -> bool:
    """Every pairwise-intersecting set of maximal cliques has a common vertex."""
    cliques = [set(c) for c in nx.find_cliques(to_nx(g))] if g.order else []
    k = len(cliques)
    for r in range(2, k + 1):
        for fam in combinations(cliques, r):
            if all(a & b for a, b in combinations(fam, 2)) and not set.intersection(*fam):
                return False
    return True
