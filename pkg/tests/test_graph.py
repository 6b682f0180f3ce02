from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquelab import (
    GraphError,
    cartesian_product,
    clique_graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    has_universal_vertex,
    induced_subgraph,
    is_complete,
    is_connected,
    is_isomorphic,
    join,
    new_graph,
    path,
    standard_family,
    star,
)
from cliquelab.graph import components, from_rows

from conftest import corpus_upto
from oracles import edge_set


@st.composite
def graphs(draw, max_order=8):
    n = draw(st.integers(0, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return new_graph(n, chosen)


class TestConstruction:
    def test_triangle(self):
        g = new_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g == complete(3)

    def test_two_isolated(self):
        g = new_graph(2, [])
        assert g.order == 2 and g.size == 0
        assert g == complement(complete(2))

    def test_duplicates_collapse(self):
        g = new_graph(4, [(0, 1), (1, 0), (1, 2)])
        assert edge_set(g) == {(0, 1), (1, 2)}
        assert g.degree(3) == 0

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_bad_edges_rejected(self, edges):
        with pytest.raises(GraphError):
            new_graph(3, edges)

    def test_raw_rows_validated(self):
        with pytest.raises(GraphError):
            from_rows([0b10, 0b00])  # asymmetric
        with pytest.raises(GraphError):
            from_rows([0b1])  # loop
        with pytest.raises(GraphError):
            from_rows([0b100, 0b0])  # out of range

    def test_families(self):
        assert complete(4).size == 6
        s = star(4)
        assert s.degree(0) == 3 and all(s.degree(v) == 1 for v in (1, 2, 3))
        assert edge_set(cycle(4)) == {(0, 1), (1, 2), (2, 3), (0, 3)}
        assert edge_set(path(4)) == {(0, 1), (1, 2), (2, 3)}
        assert standard_family("empty", 3).size == 0
        assert standard_family("cycle", 5) == cycle(5)

    def test_family_errors(self):
        with pytest.raises(GraphError):
            cycle(2)
        with pytest.raises(GraphError):
            standard_family("complete", 0)
        with pytest.raises(GraphError):
            standard_family("wheel", 4)


class TestOperations:
    def test_join_examples(self):
        assert is_isomorphic(join(empty(2), empty(2)), cycle(4))
        w4 = join(complete(1), cycle(4))
        assert w4.order == 5 and w4.size == 8
        octa = join(empty(2), cycle(4))
        assert (octa.order, octa.size) == (6, 12)
        non_adjacent = {(u, v) for u in range(6) for v in range(u + 1, 6) if not octa.adjacent(u, v)}
        assert non_adjacent == {(0, 1), (2, 4), (3, 5)}

    def test_product_examples(self):
        assert is_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4))
        two_k2 = cartesian_product(complete(2), empty(2))
        assert two_k2.size == 2 and len(components(two_k2)) == 2
        grid = cartesian_product(path(3), complete(2))
        assert grid.order == 6 and grid.size == 7

    def test_product_layout(self):
        g = cartesian_product(path(3), complete(2))
        # vertex (i, j) is i * 2 + j
        assert g.adjacent(0, 1) and g.adjacent(0, 2) and not g.adjacent(0, 3)

    def test_complement_examples(self):
        assert complement(complete(3)) == empty(3)
        assert complement(complement(path(4))) == path(4)
        three_k2 = new_graph(6, [(0, 1), (2, 3), (4, 5)])
        assert is_isomorphic(complement(three_k2), join(empty(2), cycle(4)))

    def test_induced_subgraph_examples(self):
        assert induced_subgraph(cycle(4), [0, 1, 2]) == path(3)
        assert induced_subgraph(cycle(5), []).order == 0
        assert induced_subgraph(complete(4), [0, 2, 3]) == complete(3)
        with pytest.raises(GraphError):
            induced_subgraph(cycle(4), [0, 4])

    def test_induced_preserves_order(self):
        g = induced_subgraph(path(4), [3, 2, 0])
        assert edge_set(g) == {(0, 1)}

    def test_disjoint_union(self):
        g = disjoint_union(complete(2), complete(2))
        assert edge_set(g) == {(0, 1), (2, 3)}


class TestPredicates:
    def test_is_complete(self):
        assert is_complete(complete(5))
        assert is_complete(complete(1))
        assert is_complete(empty(0))
        assert not is_complete(cycle(4))

    def test_universal_vertex(self):
        assert has_universal_vertex(star(4))
        assert not has_universal_vertex(cycle(4))
        assert has_universal_vertex(complete(1))

    def test_connected(self):
        assert not is_connected(new_graph(4, [(0, 1), (2, 3)]))
        assert is_connected(cycle(5))
        assert is_connected(complete(1))
        assert is_connected(empty(0))

    def test_universal_vertex_makes_clique_graph_complete(self):
        for g in corpus_upto(6):
            if has_universal_vertex(g):
                assert is_complete(clique_graph(g)[0])


@settings(max_examples=150, deadline=None)
@given(graphs(), graphs())
def test_join_properties(g1, g2):
    j = join(g1, g2)
    n1 = g1.order
    assert j.order == g1.order + g2.order
    assert j.size == g1.size + g2.size + g1.order * g2.order
    assert all(j.adjacent(u, n1 + v) for u in range(n1) for v in range(g2.order))
    assert induced_subgraph(j, list(range(n1))) == g1


@settings(max_examples=150, deadline=None)
@given(graphs(6), graphs(6))
def test_product_edge_count(g1, g2):
    p = cartesian_product(g1, g2)
    assert p.order == g1.order * g2.order
    assert p.size == g2.order * g1.size + g1.order * g2.size


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph_invariants(g):
    assert complement(complement(g)) == g
    for u in range(g.order):
        assert not g.adjacent(u, u)
        for v in range(g.order):
            assert g.adjacent(u, v) == g.adjacent(v, u)
    assert sum(g.degrees()) == 2 * g.size
    assert hash(g) == hash(new_graph(g.order, edge_set(g)))


def test_product_edge_count_on_corpus():
    graphs4 = corpus_upto(4)
    for g1 in graphs4:
        for g2 in graphs4:
            p = cartesian_product(g1, g2)
            assert p.size == g2.order * g1.size + g1.order * g2.size
