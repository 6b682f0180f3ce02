from __future__ import annotations

import importlib
import json
import random

import networkx as nx
import pytest

from cliquelab import Bounds, complete, cycle, empty, join, path, star
from cliquelab.graph import complement, new_graph
from cliquelab.lab import (
    OBSERVATIONS,
    CheckConfig,
    ConjectureId,
    CorpusSpec,
    Outcome,
    RandomPairs,
    SweepReport,
    Verdict,
    check,
    check_clique_inventory,
    check_clique_transfer,
    check_complete_iff,
    check_convergence_join,
    check_join_cliques,
    check_join_observation,
    check_k2_join,
    check_periodic_join,
    check_product_k2,
    exit_code,
    load_corpus,
    sweep,
)
sweep_module = importlib.import_module("cliquelab.lab.sweep")

from oracles import subset_cliques, to_nx

C = ConjectureId
E2 = empty(2)
P4 = path(4)
C4 = cycle(4)


# -- independent model of K(G1 + G2) on grid cells -------------------------

def oracle_cells(g1, g2):
    """Cell (i, j) -> vertex set X_i + Y_j of the join, cliques in sorted order."""
    n1 = g1.order
    xs = subset_cliques(g1)
    ys = subset_cliques(g2)
    return {(i, j): frozenset(x) | {y + n1 for y in yc} for i, x in enumerate(xs) for j, yc in enumerate(ys)}


def oracle_kjoin(g1, g2) -> nx.Graph:
    cells = oracle_cells(g1, g2)
    h = nx.Graph()
    h.add_nodes_from(cells)
    keys = list(cells)
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            if cells[keys[a]] & cells[keys[b]]:
                h.add_edge(keys[a], keys[b])
    return h


def is_maximal_clique(h: nx.Graph, members) -> bool:
    members = set(members)
    if any(not h.has_edge(a, b) for a in members for b in members if a != b):
        return False
    return not any(all(h.has_edge(w, a) for a in members) for w in h if w not in members)


# -- join clique structure --------------------------------------------------

class TestJoinCliques:
    def test_examples(self):
        v = check_join_cliques(P4, P4)
        assert v.outcome is Outcome.HOLDS and v.measured["cliques_join"] == 9
        assert check_join_cliques(E2, C4, claim=C.JOIN_COUNT).measured["predicted_count"] == 8

    def test_random_pairs_against_networkx(self):
        rng = random.Random(7)
        for g1, g2 in RandomPairs(200, 5, 6, seed=11).pairs():
            for tag in (C.JOIN_CLIQUES, C.JOIN_COUNT):
                assert check(tag, g1, g2).outcome is Outcome.HOLDS
            if rng.random() < 0.25:
                n_join = len(list(nx.find_cliques(to_nx(join(g1, g2)))))
                assert n_join == len(subset_cliques(g1)) * len(subset_cliques(g2))

    def test_empty_factor_skipped(self):
        v = check_join_cliques(empty(0), C4)
        assert v.outcome is Outcome.SKIPPED


class TestCompleteIff:
    def test_examples(self):
        v = check_complete_iff(star(4), C4)
        assert v.outcome is Outcome.HOLDS and v.measured["k_join_complete"]
        w = check_complete_iff(C4, C4)
        assert w.outcome is Outcome.HOLDS and not w.measured["k_join_complete"]


class TestTransfer:
    def test_octahedron_holds(self):
        assert check_clique_transfer(E2, C4).outcome is Outcome.HOLDS

    def test_skipped_when_factor_clique_graph_complete(self):
        v = check_clique_transfer(star(4), C4)
        assert v.outcome is Outcome.SKIPPED

    def test_p4_p4_refuted(self):
        # K(P4 + P4) is K9 minus two disjoint edges: its four cliques all have 7 cells,
        # so the 6-cell row blocks cannot be maximal.
        v = check_clique_transfer(P4, P4)
        assert v.outcome is Outcome.REFUTED
        h = oracle_kjoin(P4, P4)
        assert h.number_of_nodes() == 9 and h.number_of_edges() == 36 - 2
        sizes = sorted(len(c) for c in nx.find_cliques(h))
        assert sizes == [7, 7, 7, 7]
        w = v.witness
        block = {tuple(c) for c in w["block"]}
        assert not is_maximal_clique(h, block)
        assert w["defect"] == "not-maximal"
        ext = tuple(w["extension"])
        assert ext not in block and all(h.has_edge(ext, c) for c in block)
        # the block is exactly the lifted factor clique
        assert {c[0 if w["side"] == "g1" else 1] for c in block} == set(w["factor_clique"])


class TestInventory:
    def test_octahedron_refuted(self):
        v = check_clique_inventory(E2, C4)
        assert v.outcome is Outcome.REFUTED
        assert (v.witness["observed"], v.witness["predicted"]) == (16, 6)
        h = oracle_kjoin(E2, C4)
        assert len(list(nx.find_cliques(h))) == 16
        cells = {tuple(c) for c in v.witness["cells"]}
        assert is_maximal_clique(h, cells)
        assert len({i for i, _ in cells}) > 1  # not a row block
        assert len({j for _, j in cells}) > 2  # K(C4) = C4 has cliques of size 2 only

    def test_p4_p4_refuted(self):
        v = check_clique_inventory(P4, P4)
        assert v.outcome is Outcome.REFUTED
        assert v.witness["observed"] == 4 and v.witness["predicted"] == 4
        assert is_maximal_clique(oracle_kjoin(P4, P4), {tuple(c) for c in v.witness["cells"]})

    def test_implies_k2_join(self):
        for g1 in load_corpus(CorpusSpec(1, 4)):
            for g2 in load_corpus(CorpusSpec(1, 4)):
                if check_clique_inventory(g1, g2).outcome is Outcome.HOLDS:
                    assert check_k2_join(g1, g2).outcome is Outcome.HOLDS


class TestK2Join:
    def test_examples(self):
        v = check_k2_join(E2, C4)
        assert v.outcome is Outcome.REFUTED and v.witness["orders"] == [16, 6]
        w = check_k2_join(P4, P4)
        assert w.outcome is Outcome.HOLDS and w.measured["code"] == "C~"


class TestDynamicsOfJoins:
    def test_periodic(self):
        v = check_periodic_join(C4, C4)
        assert v.outcome is Outcome.REFUTED and v.witness["orders"] == [256, 8]
        assert v.measured["orders"] == [8, 16, 256]
        assert check_periodic_join(E2, C4).witness["orders"] == [16, 6]
        assert check_periodic_join(E2, E2).outcome is Outcome.HOLDS
        assert check_periodic_join(P4, C4).outcome is Outcome.SKIPPED

    def test_periodic_bound(self):
        cfg = CheckConfig(bounds=Bounds(max_vertices=100))
        v = check_periodic_join(C4, C4, cfg)
        assert v.outcome is Outcome.INCONCLUSIVE and v.measured["orders_so_far"] == [8, 16]

    def test_convergence(self):
        v = check_convergence_join(E2, C4)
        assert v.conjecture is C.CONV_IFF and v.outcome is Outcome.INCONCLUSIVE
        assert v.reason.startswith("suspected-refutation:")
        assert v.measured["join"]["orders"][:3] == [6, 8, 16]
        assert check_convergence_join(path(3), C4).outcome is Outcome.HOLDS
        assert check_convergence_join(P4, P4, claim=C.CONV_COMPLETE).outcome is Outcome.HOLDS
        assert check_convergence_join(P4, P4, claim=C.CONV_IFF).outcome is Outcome.SKIPPED


class TestObservations:
    def test_p4_p4(self):
        deg = check_join_observation(C.OBS_DEGREE, P4, P4)
        assert deg.outcome is Outcome.REFUTED
        assert deg.witness["degree"] == 7 and deg.witness["admissible"] == [4, 6, 8, 10]
        h = oracle_kjoin(P4, P4)
        assert h.degree(tuple(deg.witness["cell"])) == 7
        ham = check_join_observation(C.OBS_HAMILTONIAN, P4, P4)
        assert ham.outcome is Outcome.HOLDS
        cyc = [tuple(c) for c in ham.measured["cycle"]]
        assert sorted(cyc) == sorted(h.nodes) and all(h.has_edge(cyc[i - 1], cyc[i]) for i in range(len(cyc)))
        eul = check_join_observation(C.OBS_EULERIAN, P4, P4)
        assert eul.outcome is Outcome.REFUTED and eul.measured["case"] == "i"
        assert h.degree(tuple(eul.witness["cell"])) % 2 == 1

    def test_planar(self):
        v = check_join_observation(C.OBS_PLANAR, complete(2), complete(2))
        assert v.outcome is Outcome.HOLDS and v.measured["condition"] == "i"
        assert check_join_observation(C.OBS_PLANAR, P4, P4).outcome is Outcome.SKIPPED

    def test_rejects_other_tags(self):
        with pytest.raises(ValueError):
            check_join_observation(C.K2_JOIN, P4, P4)

    def test_outcomes_match_networkx(self):
        for g1 in load_corpus(CorpusSpec(1, 3)):
            for g2 in load_corpus(CorpusSpec(1, 3)):
                h = oracle_kjoin(g1, g2)
                v = check_join_observation(C.OBS_EULERIAN, g1, g2)
                if v.outcome is not Outcome.SKIPPED:
                    edges = h.subgraph([x for x in h if h.degree(x)])
                    euler = h.number_of_edges() > 0 and nx.is_eulerian(edges)
                    assert (v.outcome is Outcome.HOLDS) == euler
                p = check_join_observation(C.OBS_PLANAR, g1, g2)
                if p.outcome is not Outcome.SKIPPED:
                    assert (p.outcome is Outcome.HOLDS) == nx.check_planarity(h)[0]


class TestProduct:
    def test_examples(self):
        v = check_product_k2(complete(2), E2)
        assert v.outcome is Outcome.REFUTED
        failed = {f["property"]: f for f in v.witness["failed"]}
        assert failed["K2-isomorphic"]["orders"] == [2, 4]
        assert "K-periodic" in failed
        assert check_product_k2(complete(2), complete(2)).outcome is Outcome.HOLDS
        assert check_product_k2(path(3), complete(2)).outcome is Outcome.HOLDS
        assert check_product_k2(complete(1), C4).outcome is Outcome.SKIPPED

    def test_non_helly_skipped(self):
        octa = complement(new_graph(6, [(0, 1), (2, 3), (4, 5)]))
        assert check_product_k2(octa, complete(2)).outcome is Outcome.SKIPPED


# -- verdicts, sweeps ---------------------------------------------------------

class TestVerdicts:
    def test_exit_code(self):
        assert exit_code([]) == 0
        assert exit_code([Outcome.HOLDS, Outcome.SKIPPED]) == 0
        assert exit_code([Outcome.INCONCLUSIVE, Outcome.HOLDS]) == 3
        assert exit_code([Outcome.INCONCLUSIVE, Outcome.REFUTED]) == 2

    def test_schema(self):
        d = check_clique_inventory(E2, C4).to_dict()
        assert set(d) == {"conjecture", "instance", "outcome", "witness", "measured", "runtime_ms"}
        assert d["instance"] == {"g1": "A?", "g2": "Cl", "kind": "join"}
        assert d["outcome"] == "refuted"
        json.dumps(d)
        assert "runtime_ms" not in check_product_k2(complete(2), complete(2)).to_dict(timestamps=False)

    def test_every_tag_dispatches(self):
        for tag in ConjectureId:
            v = check(tag, complete(2), complete(2))
            assert isinstance(v, Verdict) and v.conjecture is tag
            assert v.kind == ("cartesian" if tag.value.startswith("PRODUCT") else "join")
        assert len(OBSERVATIONS) == 4


class TestSweep:
    def test_tallies(self):
        rep = sweep(C.CLIQUE_TRANSFER, CorpusSpec(4, 4))
        assert rep.instances == 121
        assert sum(rep.tallies.values()) == 121
        assert rep.count(Outcome.REFUTED) == 13
        assert rep.exit_code == 2
        # every refutation involves P4
        assert all("CL" in (v.to_dict()["instance"]["g1"], v.to_dict()["instance"]["g2"])
                   for v in rep.verdicts if v.outcome is Outcome.REFUTED)

    def test_join_sweep_holds(self):
        for tag in (C.JOIN_CLIQUES, C.JOIN_COUNT, C.COMPLETE_IFF):
            rep = sweep(tag, CorpusSpec(4, 4))
            assert rep.count(Outcome.HOLDS) == 121

    def test_parallel_equals_serial(self):
        serial = sweep(C.K2_JOIN, CorpusSpec(1, 3))
        par = sweep(C.K2_JOIN, CorpusSpec(1, 3), jobs=2)
        assert serial.to_dict(timestamps=False) == par.to_dict(timestamps=False)

    def test_filters_and_random(self):
        assert len(load_corpus(CorpusSpec(1, 4, connected_only=True))) == 1 + 1 + 2 + 6
        helly = load_corpus(CorpusSpec(1, 4, helly_only=True))
        assert len(helly) == 18  # every graph of order <= 4 is Clique-Helly
        rp = RandomPairs(5, 3, 4, seed=1)
        assert [tuple(map(repr, p)) for p in rp.pairs()] == [tuple(map(repr, p)) for p in rp.pairs()]
        rep = sweep(C.JOIN_COUNT, rp)
        assert rep.corpus["random_pairs"] == 5 and rep.instances == 5

    def test_explicit_list_and_file(self, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("Cr\nCL\n")
        assert sweep(C.JOIN_COUNT, CorpusSpec(path=str(f))).instances == 4
        assert sweep(C.JOIN_COUNT, [C4]).corpus == {"source": "explicit", "graphs": 1}

    def test_checker_error_is_inconclusive(self, monkeypatch):
        def boom(*args, **kwargs):
            raise RuntimeError("kaput")

        monkeypatch.setattr(sweep_module, "check", boom)
        rep = sweep(C.JOIN_COUNT, [C4, P4])
        assert rep.count(Outcome.INCONCLUSIVE) == 4 and rep.exit_code == 3
        assert rep.verdicts[0].reason == "checker error: RuntimeError: kaput"
        assert isinstance(rep, SweepReport)
