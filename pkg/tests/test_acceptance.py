"""Acceptance criteria, one check per criterion.

Each check prints a single ``[PASS]``/``[FAIL]`` line with its measured
values and wall time.  Run with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.  Tolerances are exact unless a time
limit is stated.
"""

from __future__ import annotations

import os
import random
import sys
import time

import networkx as nx
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cliquelab import (  # noqa: E402
    BoundExceeded,
    Converged,
    canonical_form,
    classify,
    complete,
    cycle,
    emit_graph6,
    empty,
    enumerate_cliques,
    generate_nonisomorphic,
    helly_brute_oracle,
    is_clique_helly,
    is_connected,
    parse_graph6,
    path,
)
from cliquelab.graph import complement, new_graph  # noqa: E402
from cliquelab.lab import (  # noqa: E402
    ConjectureId,
    CorpusSpec,
    Outcome,
    check_clique_inventory,
    check_join_observation,
    check_k2_join,
    check_periodic_join,
    check_product_k2,
    sweep,
)

from oracles import helly_by_definition, relabel, subset_cliques  # noqa: E402

C = ConjectureId
OCTAHEDRON = complement(new_graph(6, [(0, 1), (2, 3), (4, 5)]))


def _corpus(lo, hi):
    out = []
    for n in range(lo, hi + 1):
        out.extend(generate_nonisomorphic(n))
    return out


def crit_1():
    graphs = _corpus(1, 6)
    bad = sum(1 for g in graphs if sorted(enumerate_cliques(g).cliques) != subset_cliques(g))
    return bad == 0 and len(graphs) == 208, f"{len(graphs)} graphs, {bad} mismatches", 10.0


def crit_2():
    corpus = CorpusSpec(4, 4)
    parts = []
    ok = True
    for tag in (C.JOIN_CLIQUES, C.JOIN_COUNT, C.COMPLETE_IFF):
        rep = sweep(tag, corpus)
        ok &= rep.instances == 121 and rep.count(Outcome.HOLDS) == 121
        parts.append(f"{tag.value} {rep.count(Outcome.HOLDS)}/{rep.instances}")
    return ok, "; ".join(parts), 30.0


def crit_3():
    rep = sweep(C.CLIQUE_TRANSFER, CorpusSpec(4, 4))
    refuted = rep.count(Outcome.REFUTED)
    applicable = rep.instances - rep.count(Outcome.SKIPPED)
    sample = next((v for v in rep.verdicts if v.outcome is Outcome.REFUTED), None)
    detail = f"{refuted} refutations among {applicable} applicable pairs"
    if sample is not None:
        d = sample.to_dict(timestamps=False)
        detail += f" (e.g. {d['instance']['g1']} + {d['instance']['g2']}: block {d['witness']['block']} " \
                  f"extends by {d['witness'].get('extension')})"
    return refuted == 0, detail, None


def _oracle_k_of_join(g1, g2):
    n1 = g1.order
    cells = {(i, j): set(x) | {y + n1 for y in yc}
             for i, x in enumerate(subset_cliques(g1)) for j, yc in enumerate(subset_cliques(g2))}
    h = nx.Graph()
    h.add_nodes_from(cells)
    h.add_edges_from((a, b) for a in cells for b in cells if a < b and cells[a] & cells[b])
    return h


def crit_4():
    v = check_clique_inventory(empty(2), cycle(4))
    h = _oracle_k_of_join(empty(2), cycle(4))
    oracle_cliques = [frozenset(c) for c in nx.find_cliques(h)]
    cells = frozenset(tuple(c) for c in v.witness.get("cells", []))
    rows = {frozenset((i, j) for j in range(4)) for i in range(2)}
    cols = {frozenset((i, j) for i in range(2) for j in (a, (a + 1) % 4)) for a in range(4)}
    ok = (v.outcome is Outcome.REFUTED and v.measured["observed"] == 16 and v.measured["predicted"] == 6
          and len(oracle_cliques) == 16 and cells in oracle_cliques and cells not in rows | cols)
    return ok, f"{v.outcome.value}, observed {v.measured['observed']} vs predicted {v.measured['predicted']}, " \
               f"witness cells {sorted(cells)}", None


def crit_5():
    a = check_k2_join(empty(2), cycle(4))
    b = check_k2_join(path(4), path(4))
    k4 = emit_graph6(complete(4)).decode()
    ok = (a.outcome is Outcome.REFUTED and a.witness["orders"] == [16, 6]
          and b.outcome is Outcome.HOLDS and b.measured["code"] == k4)
    return ok, f"(2K1,C4) {a.outcome.value} orders {a.witness['orders']}; (P4,P4) {b.outcome.value} " \
               f"code {b.measured.get('code')}", None


def crit_6():
    v = check_periodic_join(cycle(4), cycle(4))
    ok = v.outcome is Outcome.REFUTED and v.witness["orders"] == [256, 8] and v.measured["orders"] == [8, 16, 256]
    return ok, f"{v.outcome.value} orders {v.witness['orders']} after {v.measured['steps']} K-steps", 5.0


def crit_7():
    cycles_ok = all(classify(cycle(n)) == Converged(0, 1, None) for n in range(4, 9))
    trees = [g for g in _corpus(1, 7) if is_connected(g) and g.size == g.order - 1]
    trees_ok = all(isinstance(c := classify(t), Converged) and c.period == 1
                   and c.trace.steps[-1].vertex_count == 1 for t in trees)
    octa = classify(OCTAHEDRON)
    counts = octa.trace.vertex_counts
    octa_ok = isinstance(octa, BoundExceeded) and counts[:3] == [6, 8, 16]
    return cycles_ok and trees_ok and octa_ok, \
        f"cycles C4..C8 {'ok' if cycles_ok else 'FAIL'}; {len(trees)} trees {'ok' if trees_ok else 'FAIL'}; " \
        f"octahedron counts {counts} then {type(octa).__name__}({getattr(octa, 'reason', '')})", None


def crit_8():
    rep = sweep(C.PRODUCT_K2, CorpusSpec(2, 4, connected_only=True, helly_only=True))
    holds_all = rep.count(Outcome.HOLDS) == rep.instances > 0
    v = check_product_k2(complete(2), empty(2))
    failed = {f["property"]: f for f in (v.witness or {}).get("failed", [])}
    orders = failed.get("K2-isomorphic", {}).get("orders")
    ok = holds_all and v.outcome is Outcome.REFUTED and orders == [2, 4]
    return ok, f"{rep.count(Outcome.HOLDS)}/{rep.instances} connected Clique-Helly pairs hold; " \
               f"(K2,2K1) {v.outcome.value} orders {orders}", 60.0


def crit_9():
    deg = check_join_observation(C.OBS_DEGREE, path(4), path(4))
    ham = check_join_observation(C.OBS_HAMILTONIAN, path(4), path(4))
    h = _oracle_k_of_join(path(4), path(4))
    cell = tuple(deg.witness["cell"]) if deg.witness else None
    ok = (deg.outcome is Outcome.REFUTED and deg.witness["degree"] == 7 and h.degree(cell) == 7
          and ham.outcome is Outcome.HOLDS)
    return ok, f"OBS-DEGREE {deg.outcome.value} (cell {cell} degree {deg.witness['degree']}); " \
               f"OBS-HAMILTONIAN {ham.outcome.value}", None


def crit_10():
    graphs = [g for g in _corpus(1, 5) if len(enumerate_cliques(g)) <= 16]
    bad = 0
    for g in graphs:
        fast = is_clique_helly(g).decision.value == "true"
        bad += fast != helly_brute_oracle(g) or fast != helly_by_definition(g)
    octa = is_clique_helly(OCTAHEDRON)
    ok = bad == 0 and octa.decision.value == "false" and len(octa.witness) == 4
    return ok, f"{len(graphs)} graphs, {bad} disagreements; octahedron {octa.decision.value} " \
               f"witness size {len(octa.witness)}", None


def crit_11():
    rng = random.Random(20240611)
    mismatches = 0
    for _ in range(10_000):
        n = rng.randint(6, 8)
        g = new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        mismatches += canonical_form(g) != canonical_form(relabel(g, perm))
    corpus = _corpus(1, 7)
    codes = {canonical_form(g) for g in corpus}
    roundtrip_bad = sum(1 for g in corpus if emit_graph6(parse_graph6(emit_graph6(g))) != emit_graph6(g)
                        or parse_graph6(emit_graph6(g)) != g)
    ok = mismatches == 0 and len(codes) == len(corpus) and roundtrip_bad == 0
    return ok, f"10000 trials, {mismatches} mismatches; {len(codes)}/{len(corpus)} distinct codes; " \
               f"{roundtrip_bad} round-trip failures", None


def crit_12():
    counts = [len(generate_nonisomorphic(n)) for n in range(1, 8)]
    return counts == [1, 2, 4, 11, 34, 156, 1044], f"counts {counts}", 300.0


CRITERIA = {
    1: ("clique enumeration matches subset oracle", crit_1),
    2: ("join structure sweep", crit_2),
    3: ("clique-transfer sweep has no refutations", crit_3),
    4: ("inventory refuted on (2K1, C4)", crit_4),
    5: ("K2-join refuted on (2K1, C4), holds on (P4, P4)", crit_5),
    6: ("periodic join refuted on (C4, C4)", crit_6),
    7: ("dynamics of cycles, trees, octahedron", crit_7),
    8: ("K2 of Cartesian products", crit_8),
    9: ("observations on (P4, P4)", crit_9),
    10: ("Clique-Helly oracle equivalence", crit_10),
    11: ("canonical form soundness", crit_11),
    12: ("corpus counts", crit_12),
}


def evaluate(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    ok, detail, limit = fn()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; time limit {limit:g}s exceeded"
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail} ({elapsed:.2f}s)"
    print(line, flush=True)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    with capsys.disabled():  # the criterion lines belong in the run log
        print()
        ok, line = evaluate(number)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n)[0] for n in sorted(CRITERIA)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
