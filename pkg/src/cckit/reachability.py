"""Directed reachability and its comparator-circuit pebbling.

The circuit built here certifies reachability in an ordered DAG by
dripping one pebble per round onto the source wire and letting each
round's edge gates push pebbles forward greedily.  After n rounds every
node reachable from node 0 holds a pebble.  Arbitrary digraphs are first
made ordered with :func:`layer`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .circuit import Circuit, Comparator, Const
from .errors import BadShapeError, IndexOutOfRangeError, PreconditionViolatedError


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.n < 1:
            raise BadShapeError("need at least one node")
        for (u, v) in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRangeError(f"edge ({u}, {v}) out of range")


def reachable_set(g: Digraph, src: int) -> set:
    """Breadth-first closure from src, src included."""
    if not 0 <= src < g.n:
        raise IndexOutOfRangeError(f"source {src} out of range")
    succ = [[] for _ in range(g.n)]
    for (u, v) in g.edges:
        succ[u].append(v)
    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def layer(g: Digraph, src: int):
    """Time-expand g into an ordered DAG.

    Node (v, t) becomes t*n + v for t in 0..n-1, after swapping labels so
    the source sits at 0.  Every original edge (u, v) yields (u,t) ->
    (v,t+1), and stay-edges (v,t) -> (v,t+1) keep reached nodes reached.
    All resulting edges go from a lower to a higher index, so the result
    feeds reach_to_ccv directly with its source at node 0.

    Returns (layered graph, node_map) where node_map sends an original
    node v to the index of (v, n-1); reachability 0 -> node_map[v] in the
    layered graph matches src -> v in g.
    """
    if not 0 <= src < g.n:
        raise IndexOutOfRangeError(f"source {src} out of range")
    n = g.n

    def relabel(v):
        if v == src:
            return 0
        if v == 0:
            return src
        return v

    arcs = set()
    for t in range(n - 1):
        for (u, v) in g.edges:
            arcs.add((t * n + relabel(u), (t + 1) * n + relabel(v)))
        for v in range(n):
            arcs.add((t * n + v, (t + 1) * n + v))
    node_map = {v: (n - 1) * n + relabel(v) for v in range(n)}
    return Digraph(n * n, frozenset(arcs)), node_map


def reach_to_ccv(g: Digraph, target: int) -> Circuit:
    """Pebbling circuit deciding whether node 0 reaches target.

    Needs every edge (i, j) to satisfy i < j (see layer()).  Wires k and
    n+k carry iota_k (constant 1, the pebble supply) and nu_k (constant
    0, node k's marker).  Gadget k first drops pebble k onto nu_0, then
    sweeps all ordered pairs, moving a pebble along each edge whose tail
    is marked; non-edges get dummy gates so gate positions depend only on
    (n, k, i, j).
    """
    n = g.n
    if not 0 <= target < n:
        raise IndexOutOfRangeError(f"target {target} out of range")
    for (i, j) in g.edges:
        if i >= j:
            raise PreconditionViolatedError(f"edge ({i}, {j}) is not ascending")
    anns = [Const(1)] * n + [Const(0)] * n
    gates = []
    for k in range(n):
        gates.append(Comparator(k, n))
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) in g.edges:
                    gates.append(Comparator(n + i, n + j))
                else:
                    gates.append(Comparator(n + i, n + i))
    return Circuit(2 * n, tuple(anns), tuple(gates), n + target)
