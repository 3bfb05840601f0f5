"""Wire-format grammars: parsing, serialization, errors with line numbers."""

import pytest
from hypothesis import given, strategies as st

from cckit.circuit import Circuit, Comparator, Const, Input, NegInput, Negation
from cckit.errors import ParseError
from cckit.formats import (
    parse_circuit,
    parse_digraph,
    parse_graph,
    parse_sm,
    serialize_circuit,
    serialize_digraph,
    serialize_graph,
    serialize_sm,
)
from cckit.verify import gen_bipartite, gen_circuit, gen_digraph, gen_sm

CIRCUIT = """\
CCV v1
wires 3
annot 0 x0
annot 1 !x1
annot 2 1
gate 0 2
neg 1
output 2
"""


def test_parse_circuit():
    c = parse_circuit(CIRCUIT)
    assert c.num_wires == 3
    assert c.annotations == (Input(0), NegInput(1), Const(1))
    assert c.gates == (Comparator(0, 2), Negation(1))
    assert c.output_wire == 2


def test_circuit_round_trip_is_canonical():
    assert serialize_circuit(parse_circuit(CIRCUIT)) == CIRCUIT


def test_comments_and_blank_lines():
    text = "# header\n\nCCV v1\nwires 1 # trailing\n\nannot 0 0\noutput 0\n"
    c = parse_circuit(text)
    assert c.num_wires == 1 and c.annotations == (Const(0),)


def test_self_gate_parses_to_dummy():
    c = parse_circuit("CCV v1\nwires 1\nannot 0 1\ngate 0 0\noutput 0\n")
    assert c.gates[0].is_dummy


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_circuit("CCV v1\nwires 2\nannot 0 0\nannot 1 2\noutput 0\n")
    assert e.value.line == 4
    with pytest.raises(ParseError) as e:
        parse_circuit("GRAPH v1\n")
    assert e.value.line == 1
    with pytest.raises(ParseError) as e:
        parse_circuit("CCV v1\nwires 2\nannot 0 0\noutput 0\n")
    assert "annot" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_circuit("CCV v1\nwires 1\nannot 0 0\ngate 0 5\noutput 0\n")
    assert e.value.line == 4
    with pytest.raises(ParseError):
        parse_circuit("CCV v1\nwires 1\nannot 0 0\nannot 0 1\noutput 0\n")


def test_missing_output_reported_at_eof():
    text = "CCV v1\nwires 1\nannot 0 0\n"
    with pytest.raises(ParseError) as e:
        parse_circuit(text)
    assert e.value.line == 3


GRAPH = """\
GRAPH v1
bottom 2
top 3
edge 0 0
edge 1 2
target-edge 1 2
"""


def test_parse_graph_with_designation():
    g, desig = parse_graph(GRAPH)
    assert g.num_bottom == 2 and g.num_top == 3
    assert g.edges == frozenset({(0, 0), (1, 2)})
    assert desig == ("edge", (1, 2))
    assert serialize_graph(g, desig) == GRAPH


def test_graph_target_top_and_none():
    text = "GRAPH v1\nbottom 1\ntop 1\ntarget-top 0\n"
    g, desig = parse_graph(text)
    assert desig == ("top", 0)
    g2, d2 = parse_graph("GRAPH v1\nbottom 1\ntop 1\n")
    assert d2 is None


def test_graph_rejects_duplicate_edges():
    with pytest.raises(ParseError) as e:
        parse_graph("GRAPH v1\nbottom 1\ntop 1\nedge 0 0\nedge 0 0\n")
    assert e.value.line == 5


SM = """\
SM v1
n 2
man 0: 0 1
man 1: 1 0
woman 0: 0 1
woman 1: 1 0
"""


def test_parse_sm():
    inst = parse_sm(SM)
    assert inst.n == 2
    assert inst.man_pref == ((0, 1), (1, 0))
    assert inst.woman_pref == ((0, 1), (1, 0))
    assert serialize_sm(inst) == SM


def test_sm_rejects_non_permutations():
    bad = "SM v1\nn 2\nman 0: 0 0\nman 1: 1 0\nwoman 0: 0 1\nwoman 1: 1 0\n"
    with pytest.raises(ParseError) as e:
        parse_sm(bad)
    assert e.value.line == 3


DIGRAPH = """\
DIGRAPH v1
nodes 3
arc 0 1
arc 2 2
"""


def test_parse_digraph():
    g = parse_digraph(DIGRAPH)
    assert g.n == 3
    assert g.edges == frozenset({(0, 1), (2, 2)})
    assert serialize_digraph(g) == DIGRAPH


def test_digraph_rejects_bad_arcs():
    with pytest.raises(ParseError):
        parse_digraph("DIGRAPH v1\nnodes 1\narc 0 1\n")
    with pytest.raises(ParseError):
        parse_digraph("DIGRAPH v1\nnodes 1\narc 0 0\narc 0 0\n")


def test_wrong_magic_is_line_one():
    for parse in (parse_circuit, parse_graph, parse_sm, parse_digraph):
        with pytest.raises(ParseError) as e:
            parse("BOGUS v9\n")
        assert e.value.line == 1


@given(st.integers(0, 2**63))
def test_random_circuit_round_trip(seed):
    c = gen_circuit(seed, 6, 10, with_neg=bool(seed & 1))
    assert parse_circuit(serialize_circuit(c)) == c


@given(st.integers(0, 2**63))
def test_random_graph_round_trip(seed):
    g = gen_bipartite(seed, 6, 6, 0.35)
    got, desig = parse_graph(serialize_graph(g))
    assert got == g and desig is None


@given(st.integers(0, 2**63), st.integers(1, 6))
def test_random_sm_round_trip(seed, n):
    inst = gen_sm(seed, n)
    assert parse_sm(serialize_sm(inst)) == inst


@given(st.integers(0, 2**63))
def test_random_digraph_round_trip(seed):
    g = gen_digraph(seed, 7, 0.3)
    assert parse_digraph(serialize_digraph(g)) == g
