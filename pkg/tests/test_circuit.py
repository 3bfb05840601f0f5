"""Core IR and evaluator behaviour."""

import pytest
from hypothesis import given, strategies as st

from cckit.circuit import (
    STAR,
    Circuit,
    Comparator,
    Const,
    Input,
    NegInput,
    Negation,
    compose,
    dual,
    eval,
    eval_tri,
    mirror,
    normalize_down,
    refines,
    resolve_inputs,
    tri_and,
    tri_not,
    tri_or,
)
from cckit.errors import (
    BadShapeError,
    IndexOutOfRangeError,
    InputArityError,
    NegationNotSupportedError,
)
from cckit.verify import gen_circuit


def wires(n, *anns):
    return tuple(anns) if anns else tuple(Input(i) for i in range(n))


def test_single_gate_is_min_max():
    c = Circuit(2, wires(2), (Comparator(0, 1),), 0)
    for p in (0, 1):
        for q in (0, 1):
            outputs, answer, _ = eval(c, (p, q))
            assert outputs == (p & q, p | q)
            assert answer == (p & q)


def test_dummy_gate_changes_nothing():
    c = Circuit(2, wires(2), (Comparator(1, 1),), 1)
    assert eval(c, (1, 0))[0] == (1, 0)


def test_empty_circuit_echoes_annotations():
    c = Circuit(3, (Const(1), Input(0), NegInput(0)), (), 2)
    outputs, answer, trace = eval(c, (0,))
    assert outputs == (1, 0, 1)
    assert answer == 1
    assert trace.snapshots == ((1, 0, 1),)


def test_arity_checked():
    c = Circuit(2, (Input(0), Input(1)), (), 0)
    with pytest.raises(InputArityError):
        eval(c, (1,))


def test_gate_wires_validated():
    with pytest.raises(IndexOutOfRangeError):
        Circuit(2, wires(2), (Comparator(0, 5),), 0)
    with pytest.raises(IndexOutOfRangeError):
        Circuit(2, wires(2), (), 9)
    with pytest.raises(BadShapeError):
        Circuit(0, (), (), 0)


def test_negation_needs_opt_in():
    c = Circuit(1, (Const(0),), (Negation(0),), 0)
    with pytest.raises(NegationNotSupportedError):
        eval(c, ())
    outputs, answer, _ = eval(c, (), allow_negations=True)
    assert outputs == (1,) and answer == 1
    with pytest.raises(NegationNotSupportedError):
        eval_tri(c, ())


def test_trace_has_one_snapshot_per_gate():
    c = Circuit(2, wires(2), (Comparator(0, 1), Comparator(1, 0)), 0)
    _, _, trace = eval(c, (1, 0))
    assert len(trace.snapshots) == 3
    assert trace.snapshots[0] == (1, 0)


def test_updown_properties():
    up = Circuit(2, wires(2), (Comparator(1, 0),), 0)
    down = Circuit(2, wires(2), (Comparator(0, 1),), 0)
    assert up.is_all_up and not up.is_all_down
    assert down.is_all_down and not down.is_all_up
    dummy = Circuit(1, wires(1), (Comparator(0, 0),), 0)
    assert dummy.is_all_up and dummy.is_all_down


def test_tri_tables():
    order = {0: 0, STAR: 1, 1: 2}
    for a in (0, STAR, 1):
        for b in (0, STAR, 1):
            lo, hi = sorted((a, b), key=order.get)
            assert tri_and(a, b) == lo
            assert tri_or(a, b) == hi
    assert tri_not(STAR) == STAR
    assert tri_not(0) == 1
    assert refines(1, STAR) and refines(0, STAR)
    assert refines(STAR, STAR) and not refines(STAR, 1)


def test_eval_tri_star_propagates():
    c = Circuit(2, wires(2), (Comparator(0, 1),), 1)
    outputs, answer, _ = eval_tri(c, (STAR, 0))
    assert outputs == (0, STAR)
    assert answer == STAR


@given(st.integers(0, 2**32), st.integers(0, 255))
def test_eval_tri_agrees_on_boolean_inputs(seed, xbits):
    c = gen_circuit(seed, 5, 10, with_neg=False)
    x = [(xbits >> i) & 1 for i in range(c.num_inputs)]
    assert eval_tri(c, x)[:2] == eval(c, x)[:2]


@given(st.integers(0, 2**32), st.integers(0, 255))
def test_popcount_is_conserved(seed, xbits):
    c = gen_circuit(seed, 6, 12, with_neg=False)
    x = [(xbits >> i) & 1 for i in range(c.num_inputs)]
    assert sum(resolve_inputs(c, x)) == sum(eval(c, x)[0])


@given(st.integers(0, 2**32), st.integers(0, 255))
def test_dual_flips_every_wire(seed, xbits):
    c = gen_circuit(seed, 5, 8, with_neg=False)
    x = [(xbits >> i) & 1 for i in range(c.num_inputs)]
    base = eval(c, x)[0]
    flipped = eval(dual(c), x)[0]
    assert all(a != b for a, b in zip(base, flipped))
    assert dual(dual(c)) == c


def test_dual_swaps_annotation_kinds():
    c = Circuit(3, (Const(0), Input(2), NegInput(1)), (), 0)
    assert dual(c).annotations == (Const(1), NegInput(2), Input(1))


@given(st.integers(0, 2**32), st.integers(0, 255))
def test_normalize_down_preserves_values(seed, xbits):
    c = gen_circuit(seed, 5, 8, with_neg=False)
    x = [(xbits >> i) & 1 for i in range(c.num_inputs)]
    down, wmap = normalize_down(c)
    assert down.is_all_down
    real = [g for g in c.gates if not g.is_dummy]
    assert down.num_wires == c.num_wires + 2 * len(real)
    assert len(down.gates) == 3 * len(real)
    base = eval(c, x)[0]
    moved = eval(down, x)[0]
    assert all(base[w] == moved[wmap[w]] for w in range(c.num_wires))
    assert down.output_wire == wmap[c.output_wire]


def test_normalize_down_rejects_negations():
    c = Circuit(1, (Const(0),), (Negation(0),), 0)
    with pytest.raises(NegationNotSupportedError):
        normalize_down(c)


def test_mirror_reverses_indices():
    c = Circuit(3, (Const(0), Const(1), Input(0)), (Comparator(0, 2),), 1)
    m = mirror(c)
    assert m.annotations == (Input(0), Const(1), Const(0))
    assert m.gates == (Comparator(2, 0),)
    assert m.output_wire == 1
    assert mirror(m) == c
    x = (1,)
    assert eval(c, x)[0] == tuple(reversed(eval(m, x)[0]))


def test_compose_splices_inner_copies():
    ident = Circuit(1, (Input(0),), (), 0)
    orgate = Circuit(2, (Input(0), Input(1)), (Comparator(0, 1),), 1)
    whole = compose(orgate, [ident, dual(ident)])
    assert whole.num_wires == 2
    for p in (0, 1):
        # x or (not x), through one inner copy each
        assert eval(whole, (p,))[1] == 1
    neg_outer = Circuit(1, (NegInput(0),), (), 0)
    assert eval(compose(neg_outer, [ident]), (1,))[1] == 0


def test_compose_checks_arity():
    orgate = Circuit(2, (Input(0), Input(1)), (Comparator(0, 1),), 1)
    with pytest.raises(InputArityError):
        compose(orgate, [Circuit(1, (Input(0),), (), 0)])
