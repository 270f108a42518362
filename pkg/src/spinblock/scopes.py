"""Scopes involutions K_0..K_t, w-allowed actions and allowed equivalence."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .abacus import CoreTuple, rank_from_tuple
from .errors import BudgetExceeded, InvalidIndex
from .partitions import Partition, half, p_strict_partition, parity


def _check_index(i: int, p: int) -> None:
    if not isinstance(i, int) or not 0 <= i <= half(p):
        raise InvalidIndex(f"Scopes index must lie in 0..{half(p)}, got {i!r}")


def apply_K(i: int, parts: Sequence[int], p: int) -> Partition:
    """Apply K_i to a p-strict partition.  Runner 0 is never touched."""
    parts = p_strict_partition(parts, p)
    _check_index(i, p)
    if i == 0:
        ones = {x // p for x in parts if x % p == 1 and x > 1}
        minus = {(x + 1) // p for x in parts if x % p == p - 1}
        kept = [x for x in parts if x != 1 and not (x > 1 and x % p in (1, p - 1))]
        kept += [a * p + 1 for a in minus] + [b * p - 1 for b in ones]
        if 1 not in parts:
            kept.append(1)
        return tuple(sorted(kept, reverse=True))
    # 0 < i <= t: runner i <-> i+1 and p-i <-> p-i-1 (for i = t these coincide)
    up = {i, p - i - 1}
    down = {i + 1, p - i}
    out = []
    for x in parts:
        r = x % p
        out.append(x + 1 if r in up else x - 1 if r in down else x)
    return tuple(sorted(out, reverse=True))


def apply_K_tuple(i: int, c: CoreTuple) -> CoreTuple:
    _check_index(i, c.p)
    pairs = list(c.pairs)
    t = c.t
    if i == 0:
        l, e = pairs[0]
        pairs[0] = (l - (-1) ** e, 1 - e)
    elif i < t:
        pairs[i - 1], pairs[i] = pairs[i], pairs[i - 1]
    else:
        l, e = pairs[t - 1]
        pairs[t - 1] = (l, 1 - e)
    return CoreTuple.normalized(c.p, pairs)


def threshold(i: int, c: CoreTuple) -> int:
    """Largest w for which K_i is w-allowed at c (may be negative)."""
    _check_index(i, c.p)
    t = c.t
    if i == 0:
        l, e = c.pairs[0]
        return l + e - 1
    if i == t:
        return 2 * c.pairs[t - 1][0] + 1
    (li, ei), (lj, ej) = c.pairs[i - 1], c.pairs[i]
    if ei == ej:
        return (lj - li) * (-1) ** ei
    return li + lj


def is_w_allowed(i: int, c: CoreTuple, w: int) -> bool:
    """The threshold test for c^w being an end of its maximal i-string.

    The thresholds describe the rank-larger end of the string; see
    :func:`action_allowed` for the test that is symmetric in both ends.
    """
    return w <= threshold(i, c)


def rank_larger_end(i: int, c: CoreTuple) -> CoreTuple:
    other = apply_K_tuple(i, c)
    return other if rank_from_tuple(other) > rank_from_tuple(c) else c


def action_allowed(i: int, c: CoreTuple, w: int) -> bool:
    """Whether K_i is a w-allowed action between c^w and K_i(c)^w.

    Both blocks sit at the two ends of the same i-string, so the
    threshold is read off at the rank-larger of the two cores.
    """
    return is_w_allowed(i, rank_larger_end(i, c), w)


def rank_change(i: int, c: CoreTuple) -> int:
    return rank_from_tuple(apply_K_tuple(i, c)) - rank_from_tuple(c)


@dataclass(frozen=True)
class Step:
    action: int
    source: CoreTuple
    target: CoreTuple

    def to_json(self) -> dict:
        return {"action": self.action, "from": self.source.to_json(), "to": self.target.to_json()}


@dataclass
class AllowedComponent:
    start: CoreTuple
    w: int
    # each member with one witnessing sequence of steps from start
    traces: dict[CoreTuple, tuple[Step, ...]]
    max_rank: Optional[int]

    @property
    def members(self) -> list[CoreTuple]:
        return sorted(self.traces, key=lambda c: (rank_from_tuple(c), c.pairs))

    @property
    def min_rank(self) -> int:
        return min(rank_from_tuple(c) for c in self.traces)

    @property
    def minimal_members(self) -> list[CoreTuple]:
        lo = self.min_rank
        return [c for c in self.members if rank_from_tuple(c) == lo]


def allowed_component(c: CoreTuple, w: int, max_rank: Optional[int] = None, budget: int = 100_000) -> AllowedComponent:
    """Breadth-first closure of c under w-allowed Scopes actions.

    Cores above max_rank are not explored.  Components are usually
    infinite, so without a rank cap the budget will run out.
    """
    t = c.t
    traces: dict[CoreTuple, tuple[Step, ...]] = {c: ()}
    queue = deque([c])
    while queue:
        cur = queue.popleft()
        for i in range(t + 1):
            if not action_allowed(i, cur, w):
                continue
            nxt = apply_K_tuple(i, cur)
            if nxt in traces:
                continue
            if max_rank is not None and rank_from_tuple(nxt) > max_rank:
                continue
            if len(traces) >= budget:
                raise BudgetExceeded(f"allowed component exceeds {budget} cores")
            traces[nxt] = traces[cur] + (Step(i, cur, nxt),)
            queue.append(nxt)
    return AllowedComponent(c, w, traces, max_rank)


class CrossoverPairing(Enum):
    SAME_FAMILY = "same-family"
    CROSSOVER = "crossover"


def crossover_pairing(nu: Sequence[int], mu: Sequence[int]) -> CrossoverPairing:
    """Same parity pairs S-blocks with S-blocks; opposite parity crosses
    S-blocks over to A-blocks."""
    if parity(nu) == parity(mu):
        return CrossoverPairing.SAME_FAMILY
    return CrossoverPairing.CROSSOVER
