"""One checker per claim about joins and Cartesian products.

Each checker evaluates the claim on a concrete instance by brute force and
returns a :class:`Verdict`.  Refutations carry a witness that can be
re-measured independently; bounded searches that run out of room report
``inconclusive`` rather than a guess.
"""

from __future__ import annotations

import time
from functools import wraps

from ..canon import canonical_form, is_isomorphic
from ..cliques import Decision, clique_graph, enumerate_cliques, intersection_graph, is_clique_helly, join_clique_grid
from ..dynamics import BoundExceeded, BoundTripped, Converged, classify, kth_iterate
from ..errors import CanonicalLimitExceeded, CliqueLimitExceeded, JoinStructureError
from ..graph import Graph, bits, cartesian_product, components, is_complete, join
from ..predicates import find_hamiltonian_cycle, find_kuratowski_subdivision, is_eulerian
from .verdict import CheckConfig, ConjectureId, Outcome, Verdict

__all__ = [
    "check",
    "check_join_cliques",
    "check_complete_iff",
    "check_clique_transfer",
    "check_clique_inventory",
    "check_k2_join",
    "check_convergence_join",
    "check_periodic_join",
    "check_join_observation",
    "check_product_k2",
    "OBSERVATIONS",
]

C = ConjectureId
OBSERVATIONS = (C.OBS_HAMILTONIAN, C.OBS_PLANAR, C.OBS_DEGREE, C.OBS_EULERIAN)
CODE_ORDER_LIMIT = 64


class _Stop(Exception):
    """Internal early exit carrying a finished verdict."""

    def __init__(self, verdict: Verdict) -> None:
        self.verdict = verdict


def _checker(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        try:
            verdict = func(*args, **kwargs)
        except _Stop as stop:
            verdict = stop.verdict
        verdict.runtime_ms = (time.perf_counter() - start) * 1000.0
        return verdict

    return wrapper


def _verdict(tag, outcome, g1, g2, **kw) -> Verdict:
    return Verdict(tag, outcome, g1, g2, tag.kind, **kw)


def _guard(tag, g1, g2, measured, fn, *args, **kwargs):
    """Run ``fn``; resource exhaustion becomes an inconclusive verdict."""
    try:
        return fn(*args, **kwargs)
    except CliqueLimitExceeded as exc:
        raise _Stop(_verdict(tag, Outcome.INCONCLUSIVE, g1, g2, reason=str(exc), measured=measured))
    except CanonicalLimitExceeded as exc:
        raise _Stop(_verdict(tag, Outcome.INCONCLUSIVE, g1, g2, reason=str(exc), measured=measured))
    except BoundTripped as exc:
        measured = dict(measured, orders_so_far=exc.orders)
        raise _Stop(_verdict(tag, Outcome.INCONCLUSIVE, g1, g2, reason=str(exc), measured=measured))


def _code_hex(g: Graph) -> str | None:
    if g.order > CODE_ORDER_LIMIT:
        return None
    try:
        return canonical_form(g).bytes.decode("ascii")
    except CanonicalLimitExceeded:
        return None


def _empty_factor(tag, g1, g2):
    if g1.order == 0 or (g2 is not None and g2.order == 0):
        raise _Stop(_verdict(tag, Outcome.SKIPPED, g1, g2, reason="factor with no vertices"))


def _grid(tag, g1, g2, cap):
    try:
        return _guard(tag, g1, g2, {}, join_clique_grid, g1, g2, cap)
    except JoinStructureError as exc:
        raise _Stop(_verdict(tag, Outcome.INCONCLUSIVE, g1, g2, reason=f"join clique structure broken: {exc}",
                             witness=exc.witness))


def _cells(grid, members) -> list[list[int]]:
    return [list(grid.position[c]) for c in sorted(members, key=grid.position.__getitem__)]


# ---------------------------------------------------------------------------
# join clique structure


@_checker
def check_join_cliques(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig(),
                       claim: ConjectureId = C.JOIN_CLIQUES) -> Verdict:
    """Cliques of ``g1 + g2`` are exactly the unions ``X_i + Y_j``; there are ``n*m``."""
    tag = claim
    _empty_factor(tag, g1, g2)
    cap = config.bounds.max_cliques
    f1 = _guard(tag, g1, g2, {}, enumerate_cliques, g1, cap)
    f2 = _guard(tag, g1, g2, {}, enumerate_cliques, g2, cap)
    fj = _guard(tag, g1, g2, {}, enumerate_cliques, join(g1, g2), cap)
    n1 = g1.order
    predicted = {tuple(x) + tuple(y + n1 for y in yc) for x in f1 for yc in f2}
    observed = set(fj.cliques)
    measured = {"cliques_g1": len(f1), "cliques_g2": len(f2), "cliques_join": len(fj),
                "predicted_count": len(f1) * len(f2)}
    count_ok = len(fj) == len(f1) * len(f2)
    if tag is C.JOIN_COUNT:
        if count_ok:
            return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
        return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured,
                        witness={"observed": len(fj), "predicted": len(f1) * len(f2)})
    extra = sorted(observed - predicted)
    missing = sorted(predicted - observed)
    if not extra and not missing and count_ok:
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
    if extra:
        witness = {"join_clique_not_a_union": list(extra[0])}
    elif missing:
        witness = {"union_not_a_join_clique": list(missing[0])}
    else:
        witness = {"observed": len(fj), "predicted": len(f1) * len(f2)}
    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)


@_checker
def check_complete_iff(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig()) -> Verdict:
    """``K(g1 + g2)`` complete iff ``K(g1)`` or ``K(g2)`` complete."""
    tag = C.COMPLETE_IFF
    _empty_factor(tag, g1, g2)
    cap = config.bounds.max_cliques
    k1 = _guard(tag, g1, g2, {}, clique_graph, g1, cap)[0]
    k2 = _guard(tag, g1, g2, {}, clique_graph, g2, cap)[0]
    kj = _guard(tag, g1, g2, {}, clique_graph, join(g1, g2), cap)[0]
    lhs = is_complete(kj)
    rhs = is_complete(k1) or is_complete(k2)
    measured = {"k_join_complete": lhs, "k_g1_complete": is_complete(k1), "k_g2_complete": is_complete(k2),
                "k_join_order": kj.order}
    if lhs == rhs:
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
    if lhs:
        witness = {"direction": "only-if", "k_join_complete": True}
    else:
        a, b = _non_adjacent_pair(kj)
        witness = {"direction": "if", "nonadjacent_join_cliques": [a, b]}
    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)


def _non_adjacent_pair(g: Graph) -> tuple[int, int]:
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if not g.adjacent(u, v):
                return u, v
    raise ValueError("graph is complete")


# ---------------------------------------------------------------------------
# cliques of K(G1 + G2)


def _factor_clique_graphs(tag, g1, g2, cap):
    k1 = _guard(tag, g1, g2, {}, clique_graph, g1, cap)[0]
    k2 = _guard(tag, g1, g2, {}, clique_graph, g2, cap)[0]
    if is_complete(k1) or is_complete(k2):
        raise _Stop(_verdict(tag, Outcome.SKIPPED, g1, g2,
                             reason="K(g1) or K(g2) is complete",
                             measured={"k_g1_complete": is_complete(k1), "k_g2_complete": is_complete(k2)}))
    return k1, k2


def _clique_defect(kg: Graph, members: frozenset[int]):
    """``None`` if ``members`` is a maximal clique of ``kg``, else what is wrong."""
    rows = kg.rows
    mask = 0
    for c in members:
        mask |= 1 << c
    for a in members:
        missing = mask & ~rows[a] & ~(1 << a)
        if missing:
            return "not-complete", (a, next(bits(missing)))
    for w in range(kg.order):
        if not mask >> w & 1 and rows[w] & mask == mask:
            return "not-maximal", w
    return None


def _inventory(grid, k1, k2, cap, tag, g1, g2):
    cq1 = _guard(tag, g1, g2, {}, enumerate_cliques, k1, cap)
    cq2 = _guard(tag, g1, g2, {}, enumerate_cliques, k2, cap)
    rows = [(q, grid.row_block(q)) for q in cq1]
    cols = [(r, grid.column_block(r)) for r in cq2]
    return rows, cols


@_checker
def check_clique_transfer(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig()) -> Verdict:
    """Each clique ``Q`` of ``K(g1)`` lifts to the maximal clique ``A_Q`` of ``K(g1 + g2)``."""
    tag = C.CLIQUE_TRANSFER
    _empty_factor(tag, g1, g2)
    cap = config.bounds.max_cliques
    k1, k2 = _factor_clique_graphs(tag, g1, g2, cap)
    grid = _grid(tag, g1, g2, cap)
    kj = intersection_graph(join(g1, g2).order, grid.family.cliques)
    rows, cols = _inventory(grid, k1, k2, cap, tag, g1, g2)
    measured = {"row_blocks": len(rows), "column_blocks": len(cols), "k_join_order": kj.order}
    for side, blocks in (("g1", rows), ("g2", cols)):
        for q, block in blocks:
            defect = _clique_defect(kj, block)
            if defect is not None:
                kind, where = defect
                witness = {"side": side, "factor_clique": list(q), "block": _cells(grid, block), "defect": kind}
                if kind == "not-maximal":
                    witness["extension"] = list(grid.position[where])
                else:
                    witness["nonadjacent"] = [list(grid.position[c]) for c in where]
                return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)
    return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)


@_checker
def check_clique_inventory(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig()) -> Verdict:
    """Every clique of ``K(g1 + g2)`` is a lifted block; their number is the sum."""
    tag = C.CLIQUE_INVENTORY
    _empty_factor(tag, g1, g2)
    cap = config.bounds.max_cliques
    k1, k2 = _factor_clique_graphs(tag, g1, g2, cap)
    grid = _grid(tag, g1, g2, cap)
    kj = intersection_graph(join(g1, g2).order, grid.family.cliques)
    rows, cols = _inventory(grid, k1, k2, cap, tag, g1, g2)
    inventory = {block for _, block in rows} | {block for _, block in cols}
    cliques = _guard(tag, g1, g2, {}, enumerate_cliques, kj, cap)
    outside = [c for c in cliques if frozenset(c) not in inventory]
    predicted = len(rows) + len(cols)
    measured = {"observed": len(cliques), "predicted": predicted,
                "cliques_k_g1": len(rows), "cliques_k_g2": len(cols), "outside_inventory": len(outside)}
    if not outside and len(cliques) == predicted:
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
    witness = {"observed": len(cliques), "predicted": predicted}
    if outside:
        witness["clique"] = list(outside[0])
        witness["cells"] = _cells(grid, outside[0])
    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)


@_checker
def check_k2_join(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig()) -> Verdict:
    """``K^2(g1 + g2)`` is isomorphic to ``K^2(g1) + K^2(g2)``."""
    tag = C.K2_JOIN
    _empty_factor(tag, g1, g2)
    b = config.bounds
    _factor_clique_graphs(tag, g1, g2, b.max_cliques)
    lhs, _ = _guard(tag, g1, g2, {}, kth_iterate, join(g1, g2), 2, b)
    a1, _ = _guard(tag, g1, g2, {}, kth_iterate, g1, 2, b)
    a2, _ = _guard(tag, g1, g2, {}, kth_iterate, g2, 2, b)
    rhs = join(a1, a2)
    measured = {"k2_join_order": lhs.order, "join_k2_order": rhs.order,
                "k2_join_size": lhs.size, "join_k2_size": rhs.size}
    iso = _guard(tag, g1, g2, measured, is_isomorphic, lhs, rhs)
    if iso:
        measured["code"] = _code_hex(lhs)
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
    witness = {"orders": [lhs.order, rhs.order], "codes": [_code_hex(lhs), _code_hex(rhs)]}
    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)


# ---------------------------------------------------------------------------
# dynamics of joins


def _summary(c) -> dict:
    if isinstance(c, Converged):
        return {"outcome": "converged", "preperiod": c.preperiod, "period": c.period,
                "orders": c.trace.vertex_counts}
    return {"outcome": "bound_exceeded", "reason": c.reason, "orders": c.trace.vertex_counts}


def _has_complete_iterate(c) -> bool:
    return any(s.graph is not None and is_complete(s.graph) for s in c.trace.steps)


@_checker
def check_convergence_join(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig(),
                           claim: ConjectureId | None = None) -> Verdict:
    """Convergence of ``g1 + g2`` versus convergence of the factors.

    With a complete iterate among the factors the implication "join
    converges" is checked; otherwise the biconditional.
    """
    b = config.bounds
    _empty_factor(claim or C.CONV_IFF, g1, g2)
    c1, c2 = classify(g1, b), classify(g2, b)
    route = C.CONV_COMPLETE if (_has_complete_iterate(c1) or _has_complete_iterate(c2)) else C.CONV_IFF
    tag = claim or route
    if claim is not None and claim is not route:
        return _verdict(tag, Outcome.SKIPPED, g1, g2,
                        reason=f"hypothesis routes this pair to {route.value}",
                        measured={"g1": _summary(c1), "g2": _summary(c2)})
    cj = classify(join(g1, g2), b)
    measured = {"route": route.value, "g1": _summary(c1), "g2": _summary(c2), "join": _summary(cj)}
    f1, f2, fj = (isinstance(c, Converged) for c in (c1, c2, cj))
    if route is C.CONV_COMPLETE:
        if fj:
            return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
        return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                        reason=f"suspected-refutation: a factor reaches a complete iterate but the join "
                               f"exceeded bounds ({cj.reason}) with orders {cj.trace.vertex_counts}")
    if f1 and f2:
        if fj:
            return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
        return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                        reason=f"suspected-refutation: both factors converge but the join exceeded bounds "
                               f"({cj.reason}) with orders {cj.trace.vertex_counts}")
    if fj:
        return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                        reason="suspected-refutation: the join converges but a factor exceeded bounds")
    return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                    reason="factor and join iterations exceeded bounds")


@_checker
def check_periodic_join(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig()) -> Verdict:
    """For K-periodic factors of periods ``n, m``: ``K^(2nm)(g1 + g2)`` is isomorphic to ``g1 + g2``."""
    tag = C.PERIODIC_JOIN
    b = config.bounds
    _empty_factor(tag, g1, g2)
    c1, c2 = classify(g1, b), classify(g2, b)
    measured = {"g1": _summary(c1), "g2": _summary(c2)}
    periodic = [isinstance(c, Converged) and c.preperiod == 0 for c in (c1, c2)]
    if not all(periodic):
        if any(isinstance(c, BoundExceeded) for c in (c1, c2)):
            return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                            reason="a factor was not classified within bounds")
        return _verdict(tag, Outcome.SKIPPED, g1, g2, measured=measured, reason="a factor is not K-periodic")
    n, m = c1.period, c2.period
    steps = 2 * n * m
    measured["steps"] = steps
    if steps > b.max_steps:
        return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                        reason=f"2nm = {steps} exceeds max_steps {b.max_steps}")
    g = join(g1, g2)
    it, orders = _guard(tag, g1, g2, measured, kth_iterate, g, steps, b)
    measured["orders"] = orders
    iso = _guard(tag, g1, g2, measured, is_isomorphic, it, g)
    if iso:
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
    witness = {"orders": [it.order, g.order], "codes": [_code_hex(it), _code_hex(g)], "iterate": steps}
    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)


# ---------------------------------------------------------------------------
# observations on K(G1 + G2)


def _planar_hypothesis(n, m, g2, k1, k2) -> str | None:
    # empty graphs on 3 and 2 vertices: E3, E2 as factor clique graphs
    if n < 3 and m < 3:
        return "i"
    if n == 3:
        if is_complete(g2):
            return "ii-complete"
        e3_e2 = m == 2 and k1.order == 3 and k1.size == 0 and k2.order == 2 and k2.size == 0
        if e3_e2:
            return "ii-empty"
    if n == 4 and is_complete(g2):
        return "iii"
    return None


def _eulerian_case(n, m, k1, k2) -> str | None:
    if n % 2 and m % 2:
        return "i"
    if n % 2 == 0 and m % 2 == 0 and is_eulerian(k1) and is_eulerian(k2):
        return "ii"
    if n % 2 == 0 and m % 2 == 1 and all(d % 2 for d in k1.degrees()) and k2.size == 0:
        return "iii"
    return None


@_checker
def check_join_observation(which: ConjectureId, g1: Graph, g2: Graph,
                           config: CheckConfig = CheckConfig()) -> Verdict:
    """Hamiltonicity, planarity, degree formula and Eulerian claims on ``K(g1 + g2)``."""
    tag = ConjectureId(which)
    if tag not in OBSERVATIONS:
        raise ValueError(f"{tag.value} is not an observation")
    _empty_factor(tag, g1, g2)
    cap = config.bounds.max_cliques
    grid = _grid(tag, g1, g2, cap)
    n, m = grid.rows, grid.cols
    kj = intersection_graph(g1.order + g2.order, grid.family.cliques)
    measured = {"n": n, "m": m, "k_join_order": kj.order, "k_join_size": kj.size}

    if tag is C.OBS_HAMILTONIAN:
        decision, cyc = find_hamiltonian_cycle(kj, config.hamilton_budget)
        if decision is Decision.TRUE:
            measured["cycle"] = [list(grid.position[c]) for c in cyc]
            return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
        if decision is Decision.INCONCLUSIVE:
            return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                            reason=f"Hamiltonian search exceeded {config.hamilton_budget} nodes")
        return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured,
                        witness={"order": kj.order, "exhaustive_search": "no Hamiltonian cycle",
                                 "min_degree": min(kj.degrees(), default=0)})

    if tag is C.OBS_DEGREE:
        base = n + m - 2
        admissible = sorted({base + k * (n - 1) for k in range(m + 1)} | {base + l * (m - 1) for l in range(n + 1)})
        measured["admissible"] = admissible
        measured["degrees"] = sorted(set(kj.degrees()))
        for i in range(n):
            for j in range(m):
                d = kj.degree(grid.cell(i, j))
                if d not in admissible:
                    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured,
                                    witness={"cell": [i, j], "vertex": grid.cell(i, j), "degree": d,
                                             "admissible": admissible})
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)

    k1 = _guard(tag, g1, g2, measured, clique_graph, g1, cap)[0]
    k2 = _guard(tag, g1, g2, measured, clique_graph, g2, cap)[0]

    if tag is C.OBS_PLANAR:
        case = _planar_hypothesis(n, m, g2, k1, k2)
        if case is None:
            return _verdict(tag, Outcome.SKIPPED, g1, g2, measured=measured, reason="no planarity condition applies")
        measured["condition"] = case
        res = find_kuratowski_subdivision(kj, config.planar_order_cap, config.planar_budget)
        if res.decision is Decision.TRUE:
            return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
        if res.decision is Decision.INCONCLUSIVE:
            return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured, reason=res.reason)
        witness = res.witness() or {"edges": kj.size, "bound": 3 * kj.order - 6}
        return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)

    case = _eulerian_case(n, m, k1, k2)
    if case is None:
        return _verdict(tag, Outcome.SKIPPED, g1, g2, measured=measured, reason="no Eulerian case applies")
    measured["case"] = case
    if is_eulerian(kj):
        return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)
    if kj.size == 0:
        witness = {"edges": 0}
    else:
        odd = [v for v in range(kj.order) if kj.degree(v) % 2]
        if odd:
            witness = {"cell": list(grid.position[odd[0]]), "vertex": odd[0], "degree": kj.degree(odd[0]),
                       "odd_degree_vertices": len(odd)}
        else:
            witness = {"edge_components": sum(1 for comp in components(kj) if comp.bit_count() > 1)}
    return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)


# ---------------------------------------------------------------------------
# Cartesian products


@_checker
def check_product_k2(g1: Graph, g2: Graph, config: CheckConfig = CheckConfig(),
                     claim: ConjectureId = C.PRODUCT_K2) -> Verdict:
    """For Clique-Helly factors other than K1: ``K^2(g1 x g2)`` is isomorphic to ``g1 x g2``.

    ``PRODUCT-K2`` also checks the corollary (product is Clique-Helly,
    K-periodic and K-convergent); ``PRODUCT-COROLLARY`` checks only that.
    """
    tag = claim
    b = config.bounds
    if g1.order < 2 or g2.order < 2:
        return _verdict(tag, Outcome.SKIPPED, g1, g2, reason="a factor has fewer than 2 vertices")
    h1 = _guard(tag, g1, g2, {}, is_clique_helly, g1, config.helly_cap)
    h2 = _guard(tag, g1, g2, {}, is_clique_helly, g2, config.helly_cap)
    measured = {"g1_helly": h1.decision.value, "g2_helly": h2.decision.value}
    if Decision.FALSE in (h1.decision, h2.decision):
        return _verdict(tag, Outcome.SKIPPED, g1, g2, measured=measured, reason="a factor is not Clique-Helly")
    if Decision.INCONCLUSIVE in (h1.decision, h2.decision):
        return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured,
                        reason=h1.reason or h2.reason)
    p = cartesian_product(g1, g2)
    measured["product_order"] = p.order
    failures = []
    if tag is C.PRODUCT_K2:
        k2p, orders = _guard(tag, g1, g2, measured, kth_iterate, p, 2, b)
        measured["orders"] = orders
        iso = _guard(tag, g1, g2, measured, is_isomorphic, k2p, p)
        measured["k2_isomorphic"] = iso
        if not iso:
            failures.append({"property": "K2-isomorphic", "orders": [k2p.order, p.order],
                             "codes": [_code_hex(k2p), _code_hex(p)]})
    hp = _guard(tag, g1, g2, measured, is_clique_helly, p, config.helly_cap)
    cp = classify(p, b)
    period = cp.period if isinstance(cp, Converged) and cp.preperiod == 0 else None
    measured.update(product_helly=hp.decision.value, product=_summary(cp))
    undecided = []
    if hp.decision is Decision.FALSE:
        failures.append({"property": "clique-helly",
                         "subfamily": [list(hp.family[i]) for i in hp.witness]})
    elif hp.decision is Decision.INCONCLUSIVE:
        undecided.append(hp.reason)
    if isinstance(cp, Converged):
        if period is None:
            failures.append({"property": "K-periodic", "preperiod": cp.preperiod, "period": cp.period})
    else:
        undecided.append(f"product classification exceeded bounds ({cp.reason})")
    if failures:
        witness = {"failed": failures}
        if "orders" in failures[0]:
            witness["orders"] = failures[0]["orders"]
        return _verdict(tag, Outcome.REFUTED, g1, g2, measured=measured, witness=witness)
    if undecided:
        return _verdict(tag, Outcome.INCONCLUSIVE, g1, g2, measured=measured, reason="; ".join(undecided))
    return _verdict(tag, Outcome.HOLDS, g1, g2, measured=measured)


# ---------------------------------------------------------------------------


def check(tag: ConjectureId | str, g1: Graph, g2: Graph, config: CheckConfig = CheckConfig()) -> Verdict:
    """Dispatch a conjecture tag to its checker."""
    tag = ConjectureId(tag)
    if tag in (C.JOIN_CLIQUES, C.JOIN_COUNT):
        return check_join_cliques(g1, g2, config, claim=tag)
    if tag is C.COMPLETE_IFF:
        return check_complete_iff(g1, g2, config)
    if tag is C.CLIQUE_TRANSFER:
        return check_clique_transfer(g1, g2, config)
    if tag is C.CLIQUE_INVENTORY:
        return check_clique_inventory(g1, g2, config)
    if tag is C.K2_JOIN:
        return check_k2_join(g1, g2, config)
    if tag in (C.CONV_IFF, C.CONV_COMPLETE):
        return check_convergence_join(g1, g2, config, claim=tag)
    if tag is C.PERIODIC_JOIN:
        return check_periodic_join(g1, g2, config)
    if tag in OBSERVATIONS:
        return check_join_observation(tag, g1, g2, config)
    return check_product_k2(g1, g2, config, claim=tag)
