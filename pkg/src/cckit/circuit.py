"""Comparator-circuit IR plus Boolean and three-valued evaluation.

A circuit is a fixed number of wires, each carrying one value, and an
ordered sequence of gates.  A comparator gate reads two wires and writes
the conjunction to its ``min_wire`` and the disjunction to its ``max_wire``
(the arrow tip in the usual drawings sits on the max side).  A comparator
whose two endpoints coincide is a dummy gate and changes nothing.  Wires
start from per-wire annotations: a constant, an input variable, or a
negated input variable.  One wire is designated as the answer.

Three-valued evaluation works over ``{0, STAR, 1}`` with the chain order
``0 < STAR < 1``; conjunction and disjunction are min and max in that
order, which matches the strong Kleene tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    BadShapeError,
    IndexOutOfRangeError,
    InputArityError,
    NegationNotSupportedError,
)

Bit = int

STAR = "*"
Tri = Union[int, str]

_TRI_RANK = {0: 0, STAR: 1, 1: 2}


def tri_and(a: Tri, b: Tri) -> Tri:
    return a if _TRI_RANK[a] <= _TRI_RANK[b] else b


def tri_or(a: Tri, b: Tri) -> Tri:
    return a if _TRI_RANK[a] >= _TRI_RANK[b] else b


def tri_not(v: Tri) -> Tri:
    if v == STAR:
        return STAR
    return 1 - v


def refines(finer: Tri, coarser: Tri) -> bool:
    """True when ``finer`` only pins down stars of ``coarser``."""
    return coarser == STAR or finer == coarser


@dataclass(frozen=True)
class Const:
    value: Bit


@dataclass(frozen=True)
class Input:
    index: int


@dataclass(frozen=True)
class NegInput:
    index: int


Annotation = Union[Const, Input, NegInput]


@dataclass(frozen=True)
class Comparator:
    min_wire: int
    max_wire: int

    @property
    def is_dummy(self) -> bool:
        return self.min_wire == self.max_wire


@dataclass(frozen=True)
class Negation:
    wire: int


Gate = Union[Comparator, Negation]


@dataclass(frozen=True)
class Circuit:
    num_wires: int
    annotations: tuple
    gates: tuple
    output_wire: int

    def __post_init__(self):
        object.__setattr__(self, "annotations", tuple(self.annotations))
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.num_wires < 1:
            raise BadShapeError("a circuit needs at least one wire")
        if len(self.annotations) != self.num_wires:
            raise BadShapeError(
                f"{len(self.annotations)} annotations for {self.num_wires} wires"
            )
        for a in self.annotations:
            if isinstance(a, Const):
                if a.value not in (0, 1):
                    raise BadShapeError(f"constant annotation {a.value!r}")
            elif isinstance(a, (Input, NegInput)):
                if a.index < 0:
                    raise BadShapeError("negative input index")
            else:
                raise BadShapeError(f"unknown annotation {a!r}")
        for g in self.gates:
            if isinstance(g, Comparator):
                lo, hi = min(g.min_wire, g.max_wire), max(g.min_wire, g.max_wire)
                if lo < 0 or hi >= self.num_wires:
                    raise IndexOutOfRangeError(f"gate {g} out of range")
            elif isinstance(g, Negation):
                if g.wire < 0 or g.wire >= self.num_wires:
                    raise IndexOutOfRangeError(f"gate {g} out of range")
            else:
                raise BadShapeError(f"unknown gate {g!r}")
        if not (0 <= self.output_wire < self.num_wires):
            raise IndexOutOfRangeError(f"output wire {self.output_wire} out of range")

    @property
    def num_inputs(self) -> int:
        """1 + the largest input-variable index consumed, 0 if none."""
        top = -1
        for a in self.annotations:
            if isinstance(a, (Input, NegInput)) and a.index > top:
                top = a.index
        return top + 1

    @property
    def has_negations(self) -> bool:
        return any(isinstance(g, Negation) for g in self.gates)

    @property
    def is_all_down(self) -> bool:
        """Every non-dummy comparator has its tip at the larger index."""
        return all(
            g.is_dummy or g.min_wire < g.max_wire
            for g in self.gates
            if isinstance(g, Comparator)
        ) and not self.has_negations

    @property
    def is_all_up(self) -> bool:
        """Every non-dummy comparator has its tip at the smaller index."""
        return all(
            g.is_dummy or g.max_wire < g.min_wire
            for g in self.gates
            if isinstance(g, Comparator)
        ) and not self.has_negations


@dataclass(frozen=True)
class Trace:
    """Wire-value snapshots: the initial state, then one per gate."""

    snapshots: tuple

    def __post_init__(self):
        object.__setattr__(self, "snapshots", tuple(self.snapshots))


def _resolve(c: Circuit, x: Sequence, negate) -> list:
    vals = []
    for a in c.annotations:
        if isinstance(a, Const):
            vals.append(a.value)
        else:
            if a.index >= len(x):
                raise InputArityError(
                    f"annotation consumes input {a.index} but only {len(x)} given"
                )
            v = x[a.index]
            vals.append(negate(v) if isinstance(a, NegInput) else v)
    return vals


def resolve_inputs(c: Circuit, x: Sequence[Bit]) -> tuple:
    """Initial wire values for Boolean input vector ``x``."""
    for v in x:
        if v not in (0, 1):
            raise BadShapeError(f"input bit {v!r}")
    return tuple(_resolve(c, x, lambda v: 1 - v))


def eval(
    c: Circuit,
    x: Sequence[Bit],
    allow_negations: bool = False,
    with_trace: bool = True,
):
    """Run the circuit on Boolean inputs.

    Returns ``(wire_outputs, answer, trace)``.  Negation gates are rejected
    unless ``allow_negations`` is set.  ``with_trace=False`` returns None in
    the trace slot, which matters for very large property corpora.
    """
    if c.has_negations and not allow_negations:
        raise NegationNotSupportedError("circuit contains negation gates")
    vals = list(resolve_inputs(c, x))
    snaps = [tuple(vals)] if with_trace else None
    for g in c.gates:
        if isinstance(g, Comparator):
            p = vals[g.min_wire]
            q = vals[g.max_wire]
            vals[g.min_wire] = p & q
            vals[g.max_wire] = p | q
        else:
            vals[g.wire] = 1 - vals[g.wire]
        if with_trace:
            snaps.append(tuple(vals))
    outputs = tuple(vals)
    trace = Trace(tuple(snaps)) if with_trace else None
    return outputs, outputs[c.output_wire], trace


def eval_tri(
    c: Circuit,
    x: Sequence[Tri],
    with_trace: bool = True,
):
    """Run the circuit over {0, STAR, 1}. Negation gates are rejected."""
    if c.has_negations:
        raise NegationNotSupportedError("three-valued evaluation has no negation")
    for v in x:
        if v not in _TRI_RANK:
            raise BadShapeError(f"three-valued input {v!r}")
    vals = _resolve(c, x, tri_not)
    snaps = [tuple(vals)] if with_trace else None
    for g in c.gates:
        p = vals[g.min_wire]
        q = vals[g.max_wire]
        vals[g.min_wire] = tri_and(p, q)
        vals[g.max_wire] = tri_or(p, q)
        if with_trace:
            snaps.append(tuple(vals))
    outputs = tuple(vals)
    trace = Trace(tuple(snaps)) if with_trace else None
    return outputs, outputs[c.output_wire], trace


def dual(c: Circuit) -> Circuit:
    """Swap every gate's endpoints and negate every annotation.

    The result computes the negation of the original on every wire, for
    every input vector.
    """
    if c.has_negations:
        raise NegationNotSupportedError("dual is defined for comparator-only circuits")
    anns = []
    for a in c.annotations:
        if isinstance(a, Const):
            anns.append(Const(1 - a.value))
        elif isinstance(a, Input):
            anns.append(NegInput(a.index))
        else:
            anns.append(Input(a.index))
    gates = tuple(Comparator(g.max_wire, g.min_wire) for g in c.gates)
    return Circuit(c.num_wires, tuple(anns), gates, c.output_wire)


def normalize_down(c: Circuit):
    """Rewrite so every non-dummy comparator points at the larger index.

    Each non-dummy gate is relocated onto two fresh constant-zero wires via
    three down-pointing gates; a holder map tracks where each original
    wire's value lives.  Returns ``(circuit, wire_map)`` where ``wire_map``
    sends an original wire to the wire holding its final value.  Dummy
    gates are no-ops and are dropped, so the result has exactly three
    gates and two wires per non-dummy original gate.
    """
    if c.has_negations:
        raise NegationNotSupportedError("normalize_down is comparator-only")
    holder = list(range(c.num_wires))
    anns = list(c.annotations)
    gates = []
    width = c.num_wires
    for g in c.gates:
        if g.is_dummy:
            continue
        a = holder[g.max_wire]
        b = holder[g.min_wire]
        top = width
        bot = width + 1
        width += 2
        anns.extend((Const(0), Const(0)))
        # Three pushes onto the fresh pair: the first parks the max-side
        # value, the second merges in the min side (disjunction lands on
        # top), the third drops the leftover conjunction onto bot.
        gates.append(Comparator(a, top))
        gates.append(Comparator(b, top))
        gates.append(Comparator(b, bot))
        holder[g.max_wire] = top
        holder[g.min_wire] = bot
    wire_map = {w: holder[w] for w in range(c.num_wires)}
    out = Circuit(width, tuple(anns), tuple(gates), holder[c.output_wire])
    return out, wire_map


def mirror(c: Circuit) -> Circuit:
    """Relabel wire i as num_wires-1-i everywhere, keeping gate roles."""
    m = c.num_wires
    anns = tuple(reversed(c.annotations))
    gates = []
    for g in c.gates:
        if isinstance(g, Comparator):
            gates.append(Comparator(m - 1 - g.min_wire, m - 1 - g.max_wire))
        else:
            gates.append(Negation(m - 1 - g.wire))
    return Circuit(m, anns, tuple(gates), m - 1 - c.output_wire)


def compose(outer: Circuit, inners: Sequence[Circuit]) -> Circuit:
    """Feed inner circuits' answers into the outer circuit's inputs.

    Wire w of ``outer`` annotated Input(i) becomes the designated output
    wire of a fresh copy of ``inners[i]``; NegInput(i) splices a fresh copy
    of ``dual(inners[i])`` instead.  All copies read the one shared input
    vector.  The result evaluates ``outer`` on the inners' answers.
    """
    if outer.has_negations or any(ci.has_negations for ci in inners):
        raise NegationNotSupportedError("compose is comparator-only")
    if outer.num_inputs > len(inners):
        raise InputArityError(
            f"outer consumes {outer.num_inputs} positions, {len(inners)} inners given"
        )
    anns = []
    gates = []
    wire_of = {}
    width = 0
    for w, a in enumerate(outer.annotations):
        if isinstance(a, Const):
            wire_of[w] = width
            anns.append(a)
            width += 1
            continue
        inner = inners[a.index]
        if isinstance(a, NegInput):
            inner = dual(inner)
        base = width
        anns.extend(inner.annotations)
        width += inner.num_wires
        for g in inner.gates:
            if isinstance(g, Comparator):
                gates.append(Comparator(base + g.min_wire, base + g.max_wire))
            else:  # unreachable: negation-free checked above
                gates.append(Negation(base + g.wire))
        wire_of[w] = base + inner.output_wire
    for g in outer.gates:
        gates.append(Comparator(wire_of[g.min_wire], wire_of[g.max_wire]))
    return Circuit(width, tuple(anns), tuple(gates), wire_of[outer.output_wire])
