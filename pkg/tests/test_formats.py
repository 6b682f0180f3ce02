from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from cliquelab import Graph6Error, complete, cycle, emit_dot, emit_graph6, empty, parse_graph6
from cliquelab.formats import read_graph6_file, write_graph6_file

from conftest import corpus_upto
from oracles import edge_set, to_nx
from test_graph import graphs


def test_hand_decoded_example():
    g = parse_graph6(b"D?{")
    # payload groups 000000 and 111100: the last four of ten triangle bits are set
    assert g.order == 5
    assert edge_set(g) == {(0, 4), (1, 4), (2, 4), (3, 4)}
    ref = nx.from_graph6_bytes(b"D?{")
    assert edge_set(g) == {tuple(sorted(e)) for e in ref.edges()}


def test_small_emits():
    assert emit_graph6(complete(1)) == b"@"
    assert emit_graph6(empty(0)) == b"?"
    assert emit_graph6(complete(2)) == b"A_"


def test_round_trip_corpus():
    for g in corpus_upto(7):
        code = emit_graph6(g)
        assert parse_graph6(code) == g
        assert emit_graph6(parse_graph6(code)) == code


@settings(max_examples=200, deadline=None)
@given(graphs(12))
def test_matches_networkx_encoder(g):
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert ours == theirs
    assert parse_graph6(theirs) == g


def test_long_header():
    g = cycle(70)
    code = emit_graph6(g)
    assert code[:1] == b"~" and len(code) == 4 + -(-70 * 69 // 2 // 6)
    assert parse_graph6(code) == g
    assert code == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_header_and_newline_tolerated():
    assert parse_graph6(b">>graph6<<Bw\n") == complete(3)
    assert parse_graph6("Bw") == complete(3)


@pytest.mark.parametrize(
    "text, offset",
    [
        (b"", 0),
        (b"B\x10", 1),   # byte below 63
        (b"Bw@", 2),     # trailing garbage
        (b"D?", 2),      # truncated payload
        (b"~?", 2),      # truncated long header
        (b"\x7f", 0),    # byte above 126
    ],
)
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_dot_output():
    assert "  0 -- 1;" in emit_dot(complete(2)).splitlines()
    lines = emit_dot(empty(2)).splitlines()
    assert [ln for ln in lines if "--" in ln] == []
    assert "  0;" in lines and "  1;" in lines
    tri = [ln.strip() for ln in emit_dot(complete(3)).splitlines() if "--" in ln]
    assert tri == ["0 -- 1;", "0 -- 2;", "1 -- 2;"]
    labelled = emit_dot(complete(2), labels=["a", 'b"q'])
    assert 'label="b\\"q"' in labelled


def test_dot_structure():
    text = emit_dot(cycle(5), name="C5")
    lines = text.splitlines()
    assert lines[0] == "graph C5 {" and lines[-1] == "}"
    edges = [ln.strip().rstrip(";").split(" -- ") for ln in lines if "--" in ln]
    assert sorted((int(a), int(b)) for a, b in edges) == sorted(edge_set(cycle(5)))


def test_file_round_trip(tmp_path):
    gs = corpus_upto(4)
    f = tmp_path / "c.g6"
    assert write_graph6_file(f, gs) == len(gs)
    assert read_graph6_file(f) == list(gs)
