"""Reduction of cores by w-allowed Scopes actions, the RoCK core, the rank
bound for Morita classes, and enumeration of irreducible representatives.

Every move in a reduction lowers the rank and is w-allowed at the core it
starts from.  Composite moves are tried first; each is replayed step by
step and dropped unless all of its steps qualify.  Single descents finish
the job, so the end of every trace is irreducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .abacus import CoreTuple, empty_tuple, rank_from_tuple
from .errors import BudgetExceeded, InvalidInput
from .lie import level, level_of_tuple, tuple_from_coords
from .partitions import check_modulus, half
from .scopes import apply_K_tuple, is_w_allowed


@dataclass(frozen=True)
class TraceStep:
    i: int
    tuple: CoreTuple
    rank: int
    move: str

    def to_json(self) -> dict:
        return {"i": self.i, "tuple": self.tuple.to_json(), "rank": self.rank, "move": self.move}


@dataclass
class ReductionTrace:
    start: CoreTuple
    w: int
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def end(self) -> CoreTuple:
        return self.steps[-1].tuple if self.steps else self.start

    @property
    def end_rank(self) -> int:
        return rank_from_tuple(self.end)

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "w": self.w,
            "steps": [s.to_json() for s in self.steps],
            "end": self.end.to_json(),
            "end_rank": self.end_rank,
        }


def _check_weight(w: int) -> None:
    if not isinstance(w, int) or w < 0:
        raise InvalidInput(f"weight must be a nonnegative integer, got {w!r}")


def is_descent(i: int, c: CoreTuple, w: int) -> bool:
    """K_i lowers the rank of c and is w-allowed there."""
    nxt = apply_K_tuple(i, c)
    return rank_from_tuple(nxt) < rank_from_tuple(c) and is_w_allowed(i, c, w)


def is_irreducible(c: CoreTuple, w: int) -> bool:
    _check_weight(w)
    return not any(is_descent(i, c, w) for i in range(c.t + 1))


# Composite moves.  Each builder simulates on plain tuples and returns the
# list of action indices; validation happens in _replay.

def _pairs_after(c: CoreTuple, actions) -> CoreTuple:
    for i in actions:
        c = apply_K_tuple(i, c)
    return c


def _move_left(src: int, dst: int) -> list[int]:
    # K_m swaps positions m and m+1 (1-indexed)
    return list(range(src - 1, dst - 1, -1))


def _move_right(src: int, dst: int) -> list[int]:
    return list(range(src, dst))


def _sides_actions(c: CoreTuple) -> list[int]:
    """Bring every nonempty pair onto its lower runner, nonempty pairs first."""
    t = c.t
    actions: list[int] = []
    cur = c
    for _ in range(4 * t * t + 4):
        pairs = cur.pairs
        first_one = next((k for k in range(t) if pairs[k][1] == 1), None)
        late_zero = None
        if first_one is not None:
            late_zero = next((j for j in range(first_one + 1, t) if pairs[j][1] == 0), None)
        if late_zero is not None:
            seq = _move_left(late_zero + 1, first_one + 1)
        else:
            heavy = [k for k in range(t) if pairs[k] != (0, 1) and pairs[k][1] == 1]
            if not heavy:
                return actions
            s = heavy[-1] + 1
            seq = _move_right(s, t) + [t]
        actions += seq
        cur = _pairs_after(cur, seq)
    return actions


def _lower_actions(c: CoreTuple, count: int) -> list[int]:
    """Drop each of the first ``count`` pairs by one bead: pull pair k to
    the front, then K_0."""
    actions: list[int] = []
    for k in range(1, count + 1):
        actions += _move_left(k, 1) + [0]
    return actions


def _lower_all_actions(c: CoreTuple) -> list[int]:
    head = _sides_actions(c)
    mid = _pairs_after(c, head)
    r = sum(1 for l, _ in mid.pairs if l > 0)
    if r == 0:
        return []
    body = _lower_actions(mid, r)
    tail = _sides_actions(_pairs_after(mid, body))
    return head + body + tail


def _gap_actions(c: CoreTuple, w: int) -> list[int]:
    """Shift the pairs above the lowest wide gap to the front and drop
    each of them by one bead."""
    values = sorted({l for l, _ in c.pairs if l > 0})
    cut = next((b for a, b in zip(values, values[1:]) if b - a >= max(w, 1)), None)
    if cut is None:
        return []
    t = c.t
    actions: list[int] = []
    cur = c
    # tall pairs on the upper runner travel to the far end and flip, last first
    for k in reversed(range(t)):
        l, e = cur.pairs[k]
        if l >= cut and e == 1:
            seq = _move_right(k + 1, t) + [t]
            actions += seq
            cur = _pairs_after(cur, seq)
    placed = 0
    for k in range(t):
        l, e = cur.pairs[k]
        if l >= cut:
            seq = _move_left(k + 1, placed + 1)
            actions += seq
            cur = _pairs_after(cur, seq)
            placed += 1
    seq = _lower_actions(cur, placed)
    actions += seq
    cur = _pairs_after(cur, seq)
    return actions + _sides_actions(cur)


def _replay(c: CoreTuple, actions, w: int, move: str) -> Optional[list[TraceStep]]:
    """Steps for the action list, or None if any of them is not a descent."""
    steps = []
    cur = c
    for i in actions:
        if not is_descent(i, cur, w):
            return None
        cur = apply_K_tuple(i, cur)
        steps.append(TraceStep(i, cur, rank_from_tuple(cur), move))
    return steps


def reduce_core(c: CoreTuple, w: int) -> ReductionTrace:
    """Lower c by w-allowed actions until no descent is left.

    Composite moves are tried in a fixed order (side normalization, drop
    every pair, close a wide gap); when none applies the lowest descent
    index is taken.  The result is deterministic.
    """
    _check_weight(w)
    trace = ReductionTrace(c, w)
    moves: list[tuple[str, Callable[[CoreTuple], list[int]]]] = [
        ("sides", _sides_actions),
        ("lower-all", _lower_all_actions),
        ("close-gap", lambda x: _gap_actions(x, w)),
    ]
    cur = c
    while True:
        for name, build in moves:
            actions = build(cur)
            if not actions:
                continue
            steps = _replay(cur, actions, w, name)
            if steps:
                trace.steps += steps
                cur = steps[-1].tuple
                break
        else:
            i = next((i for i in range(cur.t + 1) if is_descent(i, cur, w)), None)
            if i is None:
                return trace
            cur = apply_K_tuple(i, cur)
            trace.steps.append(TraceStep(i, cur, rank_from_tuple(cur), "descent"))


def rock_core(p: int, w: int) -> CoreTuple:
    check_modulus(p)
    _check_weight(w)
    if w == 0:
        return empty_tuple(p)
    return CoreTuple(p, tuple((w + (i - 1) * (w - 1), 0) for i in range(1, half(p) + 1)))


def donovan_bound(p: int, w: int) -> int:
    """Largest rank of a block of weight w that cannot be lowered by
    w-allowed actions."""
    check_modulus(p)
    _check_weight(w)
    if w < 1:
        raise InvalidInput("the bound needs w >= 1")
    t = half(p)
    total = p * w + (Fraction(p * (w - 1), 2) + 1) * sum(i * i * (w - 1) + i for i in range(1, t + 1))
    assert total.denominator == 1
    return int(total)


def level_budget(p: int, w: int) -> int:
    return level_of_tuple(rock_core(p, w)) + w


def enumerate_representatives(p: int, w: int, budget: int = 1_000_000) -> list[CoreTuple]:
    """Irreducible cores whose level is at most level(rock core) + w,
    sorted by rank.  ``budget`` caps the number of lattice points visited."""
    check_modulus(p)
    _check_weight(w)
    t = half(p)
    cap = level_budget(p, w)
    # n(n-1)/2 <= cap bounds each coordinate on its own
    hi = 0
    while (hi + 1) * hi // 2 <= cap:
        hi += 1
    axis = range(1 - hi, hi + 1)
    visited = 0
    found = []
    for v in _bounded_points(axis, t, cap):
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"more than {budget} lattice points below level {cap}")
        c = tuple_from_coords(v, p)
        if is_irreducible(c, w):
            found.append(c)
    found.sort(key=lambda c: (rank_from_tuple(c), c.pairs))
    return found


def _bounded_points(axis, t: int, cap: int):
    """Points of axis^t with level <= cap, pruning on partial sums."""
    vals = [(n, n * (n - 1) // 2) for n in axis]

    def rec(prefix, used):
        if len(prefix) == t:
            yield tuple(prefix)
            return
        for n, cost in vals:
            if used + cost <= cap:
                prefix.append(n)
                yield from rec(prefix, used + cost)
                prefix.pop()

    yield from rec([], 0)


def proposition_conditions(c: CoreTuple, w: int) -> tuple[bool, bool]:
    """(smallest nonzero l_i <= w, largest gap between sorted distinct
    nonzero l_i <= w - 1).  Both hold at irreducible cores."""
    values = sorted({l for l, _ in c.pairs if l > 0})
    if not values:
        return True, True
    gaps = [b - a for a, b in zip(values, values[1:])]
    return values[0] <= w, max(gaps, default=0) <= w - 1
