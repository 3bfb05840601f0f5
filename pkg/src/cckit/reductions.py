"""Lowering passes between circuit-value, greedy-matching, and
stable-marriage instances.

Every pass returns a target instance whose natural decision equals the
source decision, plus whatever correspondence data is needed to read
other answers back out (wire maps, node maps, rail maps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import (
    STAR,
    Circuit,
    Comparator,
    Const,
    Input,
    NegInput,
    Negation,
    eval,
    eval_tri,
    mirror,
    normalize_down,
    resolve_inputs,
)
from .errors import (
    BadShapeError,
    DegreeTooHighError,
    EdgeNotInGraphError,
    HasNegationsError,
    IndexOutOfRangeError,
    NotAllUpError,
    NotSquareError,
)
from .matching import BipartiteGraph, max_degree
from .stable_marriage import SMInstance


@dataclass(frozen=True)
class CcvInstance:
    """A circuit whose every annotation is a constant: nothing left to feed."""

    circuit: Circuit

    def __post_init__(self):
        for a in self.circuit.annotations:
            if not isinstance(a, Const):
                raise BadShapeError("instance circuits take no free inputs")

    def answer(self, allow_negations: bool = False) -> int:
        _, ans, _ = eval(
            self.circuit, (), allow_negations=allow_negations, with_trace=False
        )
        return ans


@dataclass(frozen=True)
class LfmmInstance:
    """Bipartite graph with a designated edge or top vertex.

    ``designated`` is ("edge", (bottom, top)) or ("top", top).
    """

    graph: BipartiteGraph
    designated: tuple

    def __post_init__(self):
        kind = self.designated[0]
        if kind == "edge":
            i, j = self.designated[1]
            ok = 0 <= i < self.graph.num_bottom and 0 <= j < self.graph.num_top
        elif kind == "top":
            j = self.designated[1]
            ok = 0 <= j < self.graph.num_top
        else:
            raise BadShapeError(f"designation kind {kind!r}")
        if not ok:
            raise IndexOutOfRangeError(f"designation {self.designated} out of range")


def to_all_up(c: Circuit):
    """normalize_down then mirror: every non-dummy gate's tip at the
    smaller index.  Returns (circuit, wire_map) with the maps composed."""
    down, down_map = normalize_down(c)
    up = mirror(down)
    m = down.num_wires
    return up, {w: m - 1 - down_map[w] for w in down_map}


def ccv_to_3vlfmm(inst: CcvInstance):
    """Gate-by-gate lowering of an all-up circuit to degree-3 greedy matching.

    Both vertex sides carry one node per (layer, wire), id layer*m + wire,
    layer 0 holding the inputs and layer l the state after l gates.  A top
    node ends up covered by the greedy matching exactly when its wire
    carries 1 at its layer.  Returns (instance, node_map) with node_map
    keyed by (layer, wire).
    """
    c = inst.circuit
    if c.has_negations:
        raise HasNegationsError("lower negations first")
    if not c.is_all_up:
        raise NotAllUpError("apply to_all_up first")
    m = c.num_wires
    vals = resolve_inputs(c, ())
    nid = lambda layer, wire: layer * m + wire
    edges = []
    for x in range(m):
        if vals[x] == 1:
            edges.append((nid(0, x), nid(0, x)))
    for layer, g in enumerate(c.gates, start=1):
        involved = set()
        if not g.is_dummy:
            u, v = g.max_wire, g.min_wire  # u < v since all-up
            involved = {u, v}
            edges.append((nid(layer, u), nid(layer - 1, u)))
            edges.append((nid(layer, u), nid(layer, u)))
            edges.append((nid(layer, v), nid(layer - 1, v)))
            edges.append((nid(layer, v), nid(layer, u)))
            edges.append((nid(layer, v), nid(layer, v)))
        for w in range(m):
            if w not in involved:
                edges.append((nid(layer, w), nid(layer - 1, w)))
                edges.append((nid(layer, w), nid(layer, w)))
    count = (len(c.gates) + 1) * m
    graph = BipartiteGraph(count, count, frozenset(edges))
    node_map = {
        (layer, wire): nid(layer, wire)
        for layer in range(len(c.gates) + 1)
        for wire in range(m)
    }
    target = nid(len(c.gates), c.output_wire)
    return LfmmInstance(graph, ("top", target)), node_map


def vlfmm_to_ccv(g: BipartiteGraph, target_top: int, pad_dummies: bool = False) -> CcvInstance:
    """Simulate greedy matching by wires: tops start 0, bottoms start 1.

    Processing a bottom against its tops in order moves the bottom's 1 to
    the first top still holding 0, which is exactly the greedy rule.  The
    designated top wire then answers coverage.  ``pad_dummies`` emits a
    dummy gate per non-edge so gate positions enumerate all pairs.
    """
    if not (0 <= target_top < g.num_top):
        raise IndexOutOfRangeError(f"top {target_top} out of range")
    T, B = g.num_top, g.num_bottom
    anns = [Const(0)] * T + [Const(1)] * B
    gates = []
    for b in range(B):
        nbrs = set(g.neighbours_of_bottom(b))
        for t in range(T):
            if t in nbrs:
                gates.append(Comparator(T + b, t))
            elif pad_dummies:
                gates.append(Comparator(T + b, T + b))
    return CcvInstance(Circuit(T + B, tuple(anns), tuple(gates), target_top))


def ccv_to_3lfmm(inst: CcvInstance):
    """Edge-designated variant: one extra top/bottom pair turns top
    coverage into edge membership.  Same preconditions as ccv_to_3vlfmm,
    which runs underneath.  Returns (instance, node_map)."""
    lf, node_map = ccv_to_3vlfmm(inst)
    g = lf.graph
    old_target = lf.designated[1]
    w_t = g.num_top
    w_b = g.num_bottom
    edges = set(g.edges)
    edges.add((w_b, old_target))
    edges.add((w_b, w_t))
    bigger = BipartiteGraph(g.num_bottom + 1, g.num_top + 1, frozenset(edges))
    # w_b prefers the old target; it settles for w_t exactly when the old
    # target was already matched, so the designated edge tracks coverage.
    return LfmmInstance(bigger, ("edge", (w_b, w_t))), node_map


def double_rail(c: Circuit):
    """Negation-free equivalent over rail pairs (2w, 2w+1).

    Wire 2w mirrors original wire w and wire 2w+1 its complement at every
    prefix; wire 2m starts 0 and returns to 0 after each negation gadget.
    Returns (circuit, wire_map) with wire_map[w] == 2w.
    """
    m = c.num_wires
    t = 2 * m
    anns = []
    for a in c.annotations:
        if isinstance(a, Const):
            anns.extend((Const(a.value), Const(1 - a.value)))
        elif isinstance(a, Input):
            anns.extend((Input(a.index), NegInput(a.index)))
        else:
            anns.extend((NegInput(a.index), Input(a.index)))
    anns.append(Const(0))
    gates = []
    for g in c.gates:
        if isinstance(g, Comparator):
            gates.append(Comparator(2 * g.min_wire, 2 * g.max_wire))
            if g.is_dummy:
                gates.append(Comparator(2 * g.min_wire + 1, 2 * g.min_wire + 1))
            else:
                gates.append(Comparator(2 * g.max_wire + 1, 2 * g.min_wire + 1))
        else:
            z = 2 * g.wire
            gates.append(Comparator(z, t))
            gates.append(Comparator(z + 1, z))
            gates.append(Comparator(t, z + 1))
    out = Circuit(2 * m + 1, tuple(anns), tuple(gates), 2 * c.output_wire)
    return out, {w: 2 * w for w in range(m)}


def ccvneg_to_ccv(inst: CcvInstance):
    """Remove negation gates via double-rail simulation."""
    circuit, wire_map = double_rail(inst.circuit)
    return CcvInstance(circuit), wire_map


def lfmm_to_ccvneg(g: BipartiteGraph, edge: tuple) -> CcvInstance:
    """Edge membership via two coverage runs and one negation.

    The graph is truncated to bottoms up to y and tops up to c, which
    cannot change whether (y, c) is greedily chosen.  A full simulation
    and a second one missing only the (y, c) gate then separate the
    cases: if (y, c) is picked, c is covered in the full run but not the
    primed one (1 and 0); if c was grabbed by an earlier bottom, both
    runs cover it (1 and 1); if c stays uncovered, the full run gives 0.
    So the answer is full(c) AND NOT primed(c).
    """
    y, cc = edge
    if not (0 <= y < g.num_bottom and 0 <= cc < g.num_top):
        raise IndexOutOfRangeError(f"edge ({y}, {cc}) out of range")
    if (y, cc) not in g.edges:
        raise EdgeNotInGraphError(f"({y}, {cc}) is not an edge")
    B, T = y + 1, cc + 1
    kept = [(i, j) for (i, j) in g.edges if i < B and j < T]

    def copy_gates(offset, skip):
        out = []
        by_bottom = [[] for _ in range(B)]
        for (i, j) in kept:
            by_bottom[i].append(j)
        for i in range(B):
            for j in sorted(by_bottom[i]):
                if (i, j) == skip:
                    continue
                out.append(Comparator(offset + T + i, offset + j))
        return out

    half = T + B
    anns = ([Const(0)] * T + [Const(1)] * B) * 2
    gates = copy_gates(0, None) + copy_gates(half, (y, cc))
    c_full = cc
    c_primed = half + cc
    gates.append(Negation(c_primed))
    gates.append(Comparator(c_full, c_primed))
    return CcvInstance(Circuit(2 * half, tuple(anns), tuple(gates), c_full))


def tri_to_bool(c: Circuit, x):
    """Boolean rail-pair simulation of a three-valued circuit.

    Each tri wire w becomes rails (2w, 2w+1) encoding 0 as (0,0), STAR as
    (0,1) and 1 as (1,1); a comparator acts railwise and the rail order
    never breaks.  Inputs are resolved against ``x`` so the result is a
    closed instance; a final comparator lands rail1 AND rail2 of the
    designated pair on the designated wire.  Returns (instance, rail_map).
    """
    if c.has_negations:
        raise HasNegationsError("three-valued circuits are negation-free")
    # a gateless copy resolves and validates the inputs in one step
    vals, _, _ = eval_tri(
        Circuit(c.num_wires, c.annotations, (), c.output_wire), x, with_trace=False
    )
    anns = []
    for v in vals:
        if v == 0:
            anns.extend((Const(0), Const(0)))
        elif v == STAR:
            anns.extend((Const(0), Const(1)))
        else:
            anns.extend((Const(1), Const(1)))
    gates = []
    for g in c.gates:
        gates.append(Comparator(2 * g.min_wire, 2 * g.max_wire))
        gates.append(Comparator(2 * g.min_wire + 1, 2 * g.max_wire + 1))
    d = c.output_wire
    gates.append(Comparator(2 * d, 2 * d + 1))
    circuit = Circuit(2 * c.num_wires, tuple(anns), tuple(gates), 2 * d)
    rail_map = {w: (2 * w, 2 * w + 1) for w in range(c.num_wires)}
    return CcvInstance(circuit), rail_map


def lfmm3_to_sm(g: BipartiteGraph, n: int) -> SMInstance:
    """Greedy matching on a degree-3 square graph as a marriage instance.

    Doubling with n dummy men and women makes preferences total; the
    instance has a unique stable marriage, and its pairs below n are the
    greedy matching.  Real person i ranks its neighbours first (ascending),
    then all dummies, then its non-neighbours (ascending); dummies rank
    everyone ascending.
    """
    if g.num_bottom != n or g.num_top != n:
        raise NotSquareError(f"{g.num_bottom}x{g.num_top} is not {n}x{n}")
    if max_degree(g) > 3:
        raise DegreeTooHighError("degree must be at most 3")

    def rows(neigh_of):
        out = []
        for i in range(n):
            nbrs = sorted(neigh_of(i))
            rest = [j for j in range(n) if j not in nbrs]
            out.append(tuple(nbrs + list(range(n, 2 * n)) + rest))
        for _ in range(n):
            out.append(tuple(range(2 * n)))
        return tuple(out)

    by_top = [[] for _ in range(n)]
    for (i, j) in g.edges:
        by_top[j].append(i)
    man_pref = rows(g.neighbours_of_bottom)
    woman_pref = rows(lambda j: by_top[j])
    return SMInstance(2 * n, man_pref, woman_pref)


def sm_to_tri_circuit(inst: SMInstance):
    """Fixed-point marriage matrices as a three-valued circuit.

    One comparator per (man, woman) pair per iteration, placed on the
    wires currently bound to cells MM(m, w) and WW(w, m): the conjunction
    side feeds m's next-rank MM cell and the disjunction side w's
    next-rank WW cell.  First-rank cells rebind to fresh constant wires
    each iteration and last-rank outputs are dropped.  Star-initialized
    cells are annotated as distinct inputs, so evaluating under an
    all-STAR vector reproduces the fixed-point computation; 2n*n
    iterations guarantee convergence.  Returns (circuit, cell_map) with
    cell_map keyed by ("m"|"w", person, rank).
    """
    n = inst.n
    anns = []

    def fresh(a):
        anns.append(a)
        return len(anns) - 1

    binding = {}
    next_in = 0
    for side, prefs in (("m", inst.man_pref), ("w", inst.woman_pref)):
        base = Const(1) if side == "m" else Const(0)
        for p in range(n):
            for r in range(n):
                if r == 0:
                    binding[(side, p, 0)] = fresh(base)
                else:
                    binding[(side, p, r)] = fresh(Input(next_in))
                    next_in += 1

    mrank = [[0] * n for _ in range(n)]
    wrank = [[0] * n for _ in range(n)]
    for m in range(n):
        for r, w in enumerate(inst.man_pref[m]):
            mrank[m][w] = r
    for w in range(n):
        for r, m in enumerate(inst.woman_pref[w]):
            wrank[w][m] = r

    gates = []
    for _ in range(2 * n * n):
        nxt = dict(binding)
        for m in range(n):
            for w in range(n):
                rm = mrank[m][w]
                rw = wrank[w][m]
                a = binding[("m", m, rm)]
                b = binding[("w", w, rw)]
                gates.append(Comparator(a, b))
                if rm + 1 < n:
                    nxt[("m", m, rm + 1)] = a
                if rw + 1 < n:
                    nxt[("w", w, rw + 1)] = b
        for m in range(n):
            nxt[("m", m, 0)] = fresh(Const(1))
        for w in range(n):
            nxt[("w", w, 0)] = fresh(Const(0))
        binding = nxt
    out = binding[("m", 0, 0)]
    circuit = Circuit(len(anns), tuple(anns), tuple(gates), out)
    return circuit, dict(binding)


def _sm_rail_prefix(inst: SMInstance):
    """Shared front half of the optimal-pair circuits."""
    tri_c, cell_map = sm_to_tri_circuit(inst)
    closed, rail_map = tri_to_bool(tri_c, (STAR,) * tri_c.num_inputs)
    return closed.circuit, cell_map, rail_map


def _optimal_pair_circuit(inst, pair, side, prefix=None):
    n = inst.n
    m, w = pair
    if not (0 <= m < n and 0 <= w < n):
        raise IndexOutOfRangeError(f"pair {pair} out of range")
    base, cell_map, rail_map = prefix if prefix is not None else _sm_rail_prefix(inst)
    gates = list(base.gates)
    if side == "m":
        rank = inst.man_pref[m].index(w)
        alpha, beta = rail_map[cell_map[("m", m, rank)]]
        if rank == n - 1:
            gates.append(Comparator(alpha, beta))
        else:
            gamma = rail_map[cell_map[("m", m, rank + 1)]][0]
            gates.append(Negation(gamma))
            gates.append(Comparator(alpha, beta))
            gates.append(Comparator(alpha, gamma))
        answer_wire = alpha
    else:
        rank = inst.woman_pref[w].index(m)
        beta = rail_map[cell_map[("w", w, rank)]][1]
        gates.append(Negation(beta))
        if rank != n - 1:
            delta = rail_map[cell_map[("w", w, rank + 1)]][1]
            gates.append(Comparator(beta, delta))
        answer_wire = beta
    with_neg = Circuit(base.num_wires, base.annotations, tuple(gates), answer_wire)
    final, _ = ccvneg_to_ccv(CcvInstance(with_neg))
    return final


def mosm_to_ccv(inst: SMInstance, pair: tuple) -> CcvInstance:
    """Circuit answering whether ``pair`` is in the man-optimal marriage.

    A man's partner is the last woman whose MM cell settles at 1, so the
    test is: this cell fully 1 and the next-rank cell not 1, read off the
    rails as alpha AND beta AND NOT gamma (no gamma at the last rank).
    """
    return _optimal_pair_circuit(inst, pair, "m")


def wosm_to_ccv(inst: SMInstance, pair: tuple) -> CcvInstance:
    """Same for the woman-optimal marriage via the WW rails.

    A woman's partner is the last man whose WW cell settles at 0; rail2
    of a cell is 0 exactly when the cell is 0, so the test is NOT beta
    AND delta with delta the next rank's rail2 (dropped at the last rank).
    """
    return _optimal_pair_circuit(inst, pair, "w")
