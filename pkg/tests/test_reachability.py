"""Digraph reachability, layering, and the pebbling circuit."""

import pytest

from cckit.circuit import eval
from cckit.errors import (
    BadShapeError,
    IndexOutOfRangeError,
    PreconditionViolatedError,
)
from cckit.reachability import Digraph, layer, reach_to_ccv, reachable_set
from cckit.verify import SplitMix, gen_digraph, split


def test_digraph_validation():
    with pytest.raises(BadShapeError):
        Digraph(0, frozenset())
    with pytest.raises(IndexOutOfRangeError):
        Digraph(2, frozenset({(0, 2)}))
    Digraph(2, frozenset({(1, 1)}))  # self-loops are fine


def test_reachable_set_bfs():
    g = Digraph(5, frozenset({(0, 1), (1, 2), (3, 4)}))
    assert reachable_set(g, 0) == {0, 1, 2}
    assert reachable_set(g, 3) == {3, 4}
    assert reachable_set(g, 4) == {4}
    with pytest.raises(IndexOutOfRangeError):
        reachable_set(g, 9)


def test_cycle_is_fully_reachable():
    g = Digraph(4, frozenset({(0, 1), (1, 2), (2, 3), (3, 0)}))
    assert reachable_set(g, 2) == {0, 1, 2, 3}


def test_layer_produces_ascending_arcs():
    g = Digraph(3, frozenset({(1, 0), (2, 1), (1, 1)}))
    layered, node_map = layer(g, 1)
    assert layered.n == 9
    assert all(u < v for (u, v) in layered.edges)
    assert node_map[1] == 2 * 3 + 0  # source relabelled to 0
    for v in range(3):
        assert (v in reachable_set(g, 1)) == (node_map[v] in reachable_set(layered, 0))


def test_pebbling_requires_ascending():
    g = Digraph(2, frozenset({(1, 0)}))
    with pytest.raises(PreconditionViolatedError):
        reach_to_ccv(g, 0)
    with pytest.raises(PreconditionViolatedError):
        reach_to_ccv(Digraph(2, frozenset({(1, 1)})), 0)


def test_pebbling_marks_every_node():
    g = Digraph(4, frozenset({(0, 1), (1, 3)}))
    c = reach_to_ccv(g, 3)
    outputs, answer, _ = eval(c, ())
    assert answer == 1
    oracle = reachable_set(g, 0)
    for v in range(4):
        assert (outputs[4 + v] == 1) == (v in oracle)
    # a marker survives only when the source pool was already pebbled
    # at its stage; here the last one is
    assert outputs[:4] == (0, 0, 0, 1)


def test_pebbling_on_random_layered_graphs():
    for i in range(40):
        rng = SplitMix(split(6, i))
        g = gen_digraph(rng.next64(), 6, 0.3)
        src = rng.below(g.n)
        layered, node_map = layer(g, src)
        c = reach_to_ccv(layered, node_map[rng.below(g.n)])
        outputs, _, _ = eval(c, (), with_trace=False)
        oracle = reachable_set(g, src)
        for v in range(g.n):
            assert (outputs[layered.n + node_map[v]] == 1) == (v in oracle)
