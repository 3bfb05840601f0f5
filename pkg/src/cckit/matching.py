"""Bipartite graphs and the greedy lexicographically-first maximal matching.

The greedy rule: scan bottom vertices in index order, match each to its
least-index top neighbour that is still free, skip it if none remains.
The result depends only on the graph, and it is maximal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadShapeError, IndexOutOfRangeError


@dataclass(frozen=True)
class BipartiteGraph:
    num_bottom: int
    num_top: int
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.num_bottom < 0 or self.num_top < 0:
            raise BadShapeError("negative vertex count")
        for (i, j) in self.edges:
            if not (0 <= i < self.num_bottom and 0 <= j < self.num_top):
                raise IndexOutOfRangeError(f"edge ({i}, {j}) out of range")

    def neighbours_of_bottom(self, i: int) -> list:
        return sorted(j for (b, j) in self.edges if b == i)

    def degree_bottom(self, i: int) -> int:
        return sum(1 for (b, _) in self.edges if b == i)

    def degree_top(self, j: int) -> int:
        return sum(1 for (_, t) in self.edges if t == j)


@dataclass(frozen=True)
class MatchingB:
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        bottoms = [i for (i, _) in self.pairs]
        tops = [j for (_, j) in self.pairs]
        if len(set(bottoms)) != len(bottoms) or len(set(tops)) != len(tops):
            raise BadShapeError("a vertex is matched twice")

    def bottom_partner(self, i: int):
        for (b, t) in self.pairs:
            if b == i:
                return t
        return None

    def covers_top(self, j: int) -> bool:
        return any(t == j for (_, t) in self.pairs)


def lfm_matching(g: BipartiteGraph) -> MatchingB:
    by_bottom = [[] for _ in range(g.num_bottom)]
    for (i, j) in g.edges:
        by_bottom[i].append(j)
    taken = [False] * g.num_top
    pairs = []
    for i in range(g.num_bottom):
        for j in sorted(by_bottom[i]):
            if not taken[j]:
                taken[j] = True
                pairs.append((i, j))
                break
    return MatchingB(frozenset(pairs))


def lfmm_decision(g: BipartiteGraph, e: tuple) -> int:
    """1 iff edge ``e`` belongs to the greedy matching."""
    i, j = e
    if not (0 <= i < g.num_bottom and 0 <= j < g.num_top):
        raise IndexOutOfRangeError(f"edge ({i}, {j}) out of range")
    return 1 if (i, j) in lfm_matching(g).pairs else 0


def vlfmm_decision(g: BipartiteGraph, w: int) -> int:
    """1 iff top vertex ``w`` is covered by the greedy matching."""
    if not (0 <= w < g.num_top):
        raise IndexOutOfRangeError(f"top {w} out of range")
    return 1 if lfm_matching(g).covers_top(w) else 0


def max_degree(g: BipartiteGraph) -> int:
    deg = {}
    for (i, j) in g.edges:
        deg[("b", i)] = deg.get(("b", i), 0) + 1
        deg[("t", j)] = deg.get(("t", j), 0) + 1
    return max(deg.values(), default=0)
