"""Stable marriage: the algorithm ladder from proposal rounds to a
three-valued fixed point.

Six algorithms compute the same man-optimal (and, from the second on,
woman-optimal) stable marriage:

1. classic proposal rounds (man side only);
2. the symmetric variant running both sides at once;
3. per-person intervals of still-possible partners;
4. the same with a delayed rejection rule (membership test instead of a
   best-suitor comparison);
5. matrices over {0, STAR, 1} whose rows encode the intervals, updated
   with full prefix conjunctions/disjunctions;
6. the same matrices updated with only the adjacent term, which is the
   form a comparator circuit can implement.

Rounds are counted as executed loop passes including the final pass that
detects no change, which keeps the n = 1 case at one round and stays
within the n^2 / 2n^2 bounds.

Ranks are 0-based throughout this module: rank r means position r in a
preference row, r = 0 being the favourite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .circuit import STAR, Tri, tri_and, tri_or
from .errors import (
    BadShapeError,
    HasStarsError,
    InternalBoundViolationError,
    NotFeasibleError,
    TooLargeError,
)


@dataclass(frozen=True)
class SMInstance:
    n: int
    man_pref: tuple
    woman_pref: tuple

    def __post_init__(self):
        object.__setattr__(self, "man_pref", tuple(tuple(r) for r in self.man_pref))
        object.__setattr__(
            self, "woman_pref", tuple(tuple(r) for r in self.woman_pref)
        )
        if self.n < 1:
            raise BadShapeError("need at least one man and one woman")
        for side in (self.man_pref, self.woman_pref):
            if len(side) != self.n:
                raise BadShapeError("preference table has wrong height")
            for row in side:
                if sorted(row) != list(range(self.n)):
                    raise BadShapeError(f"row {row} is not a permutation")


@dataclass(frozen=True)
class Marriage:
    match: tuple

    def __post_init__(self):
        object.__setattr__(self, "match", tuple(self.match))
        if sorted(self.match) != list(range(len(self.match))):
            raise BadShapeError("marriage is not a bijection")

    @property
    def pairs(self) -> frozenset:
        return frozenset(enumerate(self.match))

    def woman_partner(self, w: int) -> int:
        return self.match.index(w)


@dataclass(frozen=True)
class IntervalState:
    """Per-person contiguous rank ranges (lo, hi), inclusive, 0-based."""

    man: tuple
    woman: tuple

    def __post_init__(self):
        object.__setattr__(self, "man", tuple(tuple(p) for p in self.man))
        object.__setattr__(self, "woman", tuple(tuple(p) for p in self.woman))
        for (lo, hi) in self.man + self.woman:
            if not (0 <= lo <= hi):
                raise BadShapeError(f"empty or negative interval ({lo}, {hi})")


@dataclass(frozen=True)
class MatrixPair:
    """MM indexed [man][woman identity], WW indexed [woman][man identity]."""

    MM: tuple
    WW: tuple

    def __post_init__(self):
        object.__setattr__(self, "MM", tuple(tuple(r) for r in self.MM))
        object.__setattr__(self, "WW", tuple(tuple(r) for r in self.WW))


def _ranks(pref) -> list:
    n = len(pref)
    out = [[0] * n for _ in range(n)]
    for p, row in enumerate(pref):
        for r, q in enumerate(row):
            out[p][q] = r
    return out


def swap_sexes(inst: SMInstance) -> SMInstance:
    return SMInstance(inst.n, inst.woman_pref, inst.man_pref)


def gale_shapley(inst: SMInstance):
    """Man-proposing rounds; returns (man-optimal marriage, rounds)."""
    n = inst.n
    wrank = _ranks(inst.woman_pref)
    alive = [[True] * n for _ in range(n)]  # alive[m][w]: pair not yet removed
    bound = n * n
    rounds = 0
    top = [0] * n
    while True:
        rounds += 1
        if rounds > bound:
            raise InternalBoundViolationError("proposal rounds exceeded n^2")
        for m in range(n):
            top[m] = next(w for w in inst.man_pref[m] if alive[m][w])
        best = [None] * n
        for m in range(n):
            w = top[m]
            if best[w] is None or wrank[w][m] < wrank[w][best[w]]:
                best[w] = m
        changed = False
        for m in range(n):
            if best[top[m]] != m:
                alive[m][top[m]] = False
                changed = True
        if not changed:
            break
    return Marriage(tuple(top)), rounds


def symmetric_gs(inst: SMInstance):
    """Both sexes propose; returns (man_opt, woman_opt, rounds)."""
    n = inst.n
    mrank = _ranks(inst.man_pref)
    wrank = _ranks(inst.woman_pref)
    alive = [[True] * n for _ in range(n)]
    bound = n * n
    rounds = 0
    topm = [0] * n
    topw = [0] * n
    while True:
        rounds += 1
        if rounds > bound:
            raise InternalBoundViolationError("symmetric rounds exceeded n^2")
        for m in range(n):
            topm[m] = next(w for w in inst.man_pref[m] if alive[m][w])
        for w in range(n):
            topw[w] = next(m for m in inst.woman_pref[w] if alive[m][w])
        bestw = [None] * n
        for m in range(n):
            w = topm[m]
            if bestw[w] is None or wrank[w][m] < wrank[w][bestw[w]]:
                bestw[w] = m
        bestm = [None] * n
        for w in range(n):
            m = topw[w]
            if bestm[m] is None or mrank[m][w] < mrank[m][bestm[m]]:
                bestm[m] = w
        removals = set()
        for m in range(n):
            if bestw[topm[m]] != m:
                removals.add((m, topm[m]))
        for w in range(n):
            if bestm[topw[w]] != w:
                removals.add((topw[w], w))
        if not removals:
            break
        for (m, w) in removals:
            alive[m][w] = False
    man_opt = Marriage(tuple(topm))
    woman_match = [0] * n
    for w in range(n):
        woman_match[topw[w]] = w
    return man_opt, Marriage(tuple(woman_match)), rounds


def _interval_rounds(inst: SMInstance, delayed: bool):
    """Shared engine for the two interval algorithms.

    Yields the IntervalState at t = 0, then after every pass, ending with
    the pass that changes nothing.  All removals in one pass read the
    state the pass started from.
    """
    n = inst.n
    mrank = _ranks(inst.man_pref)
    wrank = _ranks(inst.woman_pref)
    # keyed 0..n-1 men then n..2n-1 women
    pref = list(inst.man_pref) + list(inst.woman_pref)
    rank = mrank + wrank

    def other(p, q):  # rank of person q in p's list, q given as identity
        return rank[p][q]

    lo = [0] * (2 * n)
    hi = [n - 1] * (2 * n)

    def snapshot():
        return IntervalState(
            tuple((lo[m], hi[m]) for m in range(n)),
            tuple((lo[n + w], hi[n + w]) for w in range(n)),
        )

    yield snapshot()
    bound = 2 * n * n
    rounds = 0
    while True:
        rounds += 1
        if rounds > bound:
            raise InternalBoundViolationError("interval rounds exceeded 2n^2")
        top = [0] * (2 * n)
        for p in range(2 * n):
            top[p] = pref[p][lo[p]]  # identity of p's favourite remaining
        # best suitor per person: identity of opposite-sex p with top(p) = q
        best = [None] * (2 * n)
        for p in range(2 * n):
            q = (n + top[p]) if p < n else top[p]
            if best[q] is None or other(q, p % n) < other(q, best[q]):
                best[q] = p % n
        new_lo = list(lo)
        new_hi = list(hi)
        for q in range(2 * n):
            if best[q] is not None:
                new_hi[q] = min(hi[q], other(q, best[q]))
        for p in range(2 * n):
            q = (n + top[p]) if p < n else top[p]
            if delayed:
                reject = not (lo[q] <= other(q, p % n) <= hi[q])
            else:
                reject = best[q] != p % n
            if reject:
                new_lo[p] = lo[p] + 1
        changed = (new_lo != lo) or (new_hi != hi)
        for p in range(2 * n):
            if new_lo[p] > new_hi[p]:
                raise InternalBoundViolationError("interval emptied")
        lo, hi = new_lo, new_hi
        yield snapshot()
        if not changed:
            return


def _interval_result(inst: SMInstance, states):
    n = inst.n
    final = states[-1]
    man_match = [inst.man_pref[m][final.man[m][0]] for m in range(n)]
    woman_match = [0] * n
    for w in range(n):
        woman_match[inst.woman_pref[w][final.woman[w][0]]] = w
    rounds = len(states) - 1
    return Marriage(tuple(man_match)), Marriage(tuple(woman_match)), final, rounds


def interval_run(inst: SMInstance):
    """Interval shrinking with the eager rejection rule."""
    states = list(_interval_rounds(inst, delayed=False))
    return _interval_result(inst, states)


def delayed_interval_run(inst: SMInstance):
    """Interval shrinking with the delayed (membership) rejection rule."""
    states = list(_interval_rounds(inst, delayed=True))
    return _interval_result(inst, states)


def delayed_interval_states(inst: SMInstance) -> list:
    """All IntervalStates of the delayed run, one per time step from 0."""
    return list(_interval_rounds(inst, delayed=True))


def _matrix_fixed_point(inst: SMInstance, adjacent_only: bool):
    """Shared engine for the two matrix algorithms.

    Returns (per_step MatrixPairs from t = 0, passes executed).  With
    ``adjacent_only`` the update keeps just the neighbouring term, which
    is the circuit-implementable rule; otherwise full prefix AND/OR.
    """
    n = inst.n
    MM = [[STAR] * n for _ in range(n)]
    WW = [[STAR] * n for _ in range(n)]
    for m in range(n):
        MM[m][inst.man_pref[m][0]] = 1
    for w in range(n):
        WW[w][inst.woman_pref[w][0]] = 0

    def pair():
        return MatrixPair(tuple(map(tuple, MM)), tuple(map(tuple, WW)))

    steps = [pair()]
    bound = 2 * n * n
    rounds = 0
    while True:
        rounds += 1
        if rounds > bound:
            raise InternalBoundViolationError("matrix passes exceeded 2n^2")
        newMM = [row[:] for row in MM]
        newWW = [row[:] for row in WW]
        for m in range(n):
            acc = 1
            for i in range(1, n):
                prev_w = inst.man_pref[m][i - 1]
                if adjacent_only:
                    term = WW[prev_w][m]
                else:
                    acc = tri_and(acc, WW[prev_w][m])
                    term = acc
                newMM[m][inst.man_pref[m][i]] = tri_and(MM[m][prev_w], term)
        for w in range(n):
            acc = 0
            for i in range(1, n):
                prev_m = inst.woman_pref[w][i - 1]
                if adjacent_only:
                    term = MM[prev_m][w]
                else:
                    acc = tri_or(acc, MM[prev_m][w])
                    term = acc
                newWW[w][inst.woman_pref[w][i]] = tri_or(WW[w][prev_m], term)
        changed = (newMM != MM) or (newWW != WW)
        MM, WW = newMM, newWW
        steps.append(pair())
        if not changed:
            return steps, rounds


def _extract_marriages(inst: SMInstance, mp: MatrixPair):
    n = inst.n
    man_match = [None] * n
    for m in range(n):
        picks = [
            w for w in range(n) if mp.MM[m][w] == 1 and mp.WW[w][m] in (0, STAR)
        ]
        if len(picks) != 1:
            raise InternalBoundViolationError("man-optimal extraction not unique")
        man_match[m] = picks[0]
    woman_match = [None] * n
    for w in range(n):
        picks = [
            m for m in range(n) if mp.WW[w][m] == 0 and mp.MM[m][w] in (1, STAR)
        ]
        if len(picks) != 1:
            raise InternalBoundViolationError("woman-optimal extraction not unique")
        woman_match[picks[0]] = w
    return Marriage(tuple(man_match)), Marriage(tuple(woman_match))


def interval_logic_run(inst: SMInstance):
    """Matrix fixed point with full prefix terms.

    Returns (S_M, S_W, final MatrixPair, per_step MatrixPairs from t = 0).
    """
    steps, _ = _matrix_fixed_point(inst, adjacent_only=False)
    final = steps[-1]
    s_m, s_w = _extract_marriages(inst, final)
    return s_m, s_w, final, steps


def subramanian_run(inst: SMInstance):
    """Matrix fixed point with adjacent terms only.

    Returns (S_M, S_W, final MatrixPair, iterations).
    """
    steps, rounds = _matrix_fixed_point(inst, adjacent_only=True)
    final = steps[-1]
    s_m, s_w = _extract_marriages(inst, final)
    return s_m, s_w, final, rounds


def is_stable(inst: SMInstance, mar: Marriage) -> int:
    n = inst.n
    mrank = _ranks(inst.man_pref)
    wrank = _ranks(inst.woman_pref)
    inverse = [0] * n
    for m, w in enumerate(mar.match):
        inverse[w] = m
    for m in range(n):
        for w in range(n):
            if w == mar.match[m]:
                continue
            if mrank[m][w] < mrank[m][mar.match[m]] and wrank[w][m] < wrank[w][inverse[w]]:
                return 0
    return 1


def all_stable_marriages(inst: SMInstance) -> set:
    """Brute force over all bijections. Guarded to n <= 8."""
    if inst.n > 8:
        raise TooLargeError(f"n = {inst.n} exceeds the brute-force guard")
    out = set()
    for perm in itertools.permutations(range(inst.n)):
        mar = Marriage(perm)
        if is_stable(inst, mar):
            out.add(mar)
    return out


def matrix_of_intervals(inst: SMInstance, s: IntervalState) -> MatrixPair:
    """Encode intervals as monotone rows over {0, STAR, 1}.

    A man's row reads 1 up to his interval's favourite end, STAR across
    the rest of the interval, 0 past it; a woman's row swaps 0 and 1.
    """
    n = inst.n
    mrank = _ranks(inst.man_pref)
    wrank = _ranks(inst.woman_pref)
    MM = [[0] * n for _ in range(n)]
    WW = [[0] * n for _ in range(n)]
    for m in range(n):
        lo, hi = s.man[m]
        for w in range(n):
            r = mrank[m][w]
            MM[m][w] = 1 if r <= lo else (STAR if r <= hi else 0)
    for w in range(n):
        lo, hi = s.woman[w]
        for m in range(n):
            r = wrank[w][m]
            WW[w][m] = 0 if r <= lo else (STAR if r <= hi else 1)
    return MatrixPair(tuple(map(tuple, MM)), tuple(map(tuple, WW)))


def marriage_to_feasible(inst: SMInstance, mar: Marriage) -> MatrixPair:
    n = inst.n
    mrank = _ranks(inst.man_pref)
    wrank = _ranks(inst.woman_pref)
    MM = [[0] * n for _ in range(n)]
    WW = [[0] * n for _ in range(n)]
    for m in range(n):
        for w in range(n):
            MM[m][w] = 1 if mrank[m][w] <= mrank[m][mar.match[m]] else 0
    for w in range(n):
        partner = mar.woman_partner(w)
        for m in range(n):
            WW[w][m] = 0 if wrank[w][m] <= wrank[w][partner] else 1
    return MatrixPair(tuple(map(tuple, MM)), tuple(map(tuple, WW)))


def is_feasible_pair(inst: SMInstance, mp: MatrixPair) -> int:
    """Check the fixed-point equations plus pinned first-rank entries."""
    n = inst.n
    for m in range(n):
        if mp.MM[m][inst.man_pref[m][0]] != 1:
            return 0
        for i in range(1, n):
            prev_w = inst.man_pref[m][i - 1]
            want = tri_and(mp.MM[m][prev_w], mp.WW[prev_w][m])
            if mp.MM[m][inst.man_pref[m][i]] != want:
                return 0
    for w in range(n):
        if mp.WW[w][inst.woman_pref[w][0]] != 0:
            return 0
        for i in range(1, n):
            prev_m = inst.woman_pref[w][i - 1]
            want = tri_or(mp.WW[w][prev_m], mp.MM[prev_m][w])
            if mp.WW[w][inst.woman_pref[w][i]] != want:
                return 0
    return 1


def feasible_to_marriage(inst: SMInstance, mp: MatrixPair) -> Marriage:
    """Read the stable marriage off a 0/1-valued feasible pair.

    Each man marries the least preferred woman his row still marks 1.
    """
    n = inst.n
    for row in mp.MM + mp.WW:
        if STAR in row:
            raise HasStarsError("matrices must be 0/1 valued")
    if not is_feasible_pair(inst, mp):
        raise NotFeasibleError("fixed-point equations do not hold")
    match = []
    for m in range(n):
        ones = [r for r in range(n) if mp.MM[m][inst.man_pref[m][r]] == 1]
        match.append(inst.man_pref[m][max(ones)])
    return Marriage(tuple(match))
