"""Abacus model of p-strict partitions, p-bar removal, cores and core tuples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidAbacus, NotACore
from .partitions import Partition, check_modulus, half, p_strict_partition, rank

# move kinds of a single p-bar removal
LOWER, REMOVE_P, REMOVE_PAIR = 1, 2, 3


@dataclass(frozen=True)
class Abacus:
    """Bead heights per runner; runner b at height a is the part a*p + b.

    Runners 1..p-1 hold sets of heights >= 0.  Runner 0 holds a sorted
    multiset of heights >= 1 since multiples of p may repeat.
    """

    p: int
    runners: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_modulus(self.p)
        if len(self.runners) != self.p:
            raise InvalidAbacus(f"expected {self.p} runners, got {len(self.runners)}")
        for b, heights in enumerate(self.runners):
            if list(heights) != sorted(heights):
                raise InvalidAbacus(f"runner {b} heights must be sorted: {heights}")
            if b == 0:
                if any(h < 1 for h in heights):
                    raise InvalidAbacus("runner 0 beads must sit at height >= 1")
            else:
                if any(h < 0 for h in heights) or len(set(heights)) != len(heights):
                    raise InvalidAbacus(f"runner {b} must hold distinct heights >= 0")

    def to_json(self) -> dict:
        return {"p": self.p, "runners": [list(r) for r in self.runners]}


def to_abacus(parts: Sequence[int], p: int) -> Abacus:
    parts = p_strict_partition(parts, p)
    runners: list[list[int]] = [[] for _ in range(p)]
    for x in parts:
        a, b = divmod(x, p)
        runners[b].append(a)
    return Abacus(p, tuple(tuple(sorted(r)) for r in runners))


def from_abacus(ab: Abacus) -> Partition:
    parts = [a * ab.p + b for b, heights in enumerate(ab.runners) for a in heights]
    return tuple(sorted(parts, reverse=True))


def pbar_removals(parts: Sequence[int], p: int) -> list[tuple[Partition, int]]:
    """Every partition obtained by removing one p-bar, with the move kind.

    Kind 1 lowers a bead one place into an empty position, kind 2 removes
    the part p, kind 3 removes two parts summing to p.  Results are
    distinct and listed in a fixed order.
    """
    parts = p_strict_partition(parts, p)
    present = set(parts)
    out: list[tuple[Partition, int]] = []
    seen: set[Partition] = set()

    def emit(new: list[int], kind: int) -> None:
        new_t = tuple(sorted(new, reverse=True))
        if new_t not in seen:
            seen.add(new_t)
            out.append((new_t, kind))

    for idx, x in enumerate(parts):
        if x > p and (x - p) not in present:
            new = list(parts)
            new[idx] = x - p
            emit(new, LOWER)
    if p in present:
        new = list(parts)
        new.remove(p)
        emit(new, REMOVE_P)
    for b in range(1, half(p) + 1):
        if b in present and (p - b) in present:
            new = list(parts)
            new.remove(b)
            new.remove(p - b)
            emit(new, REMOVE_PAIR)
    return out


def pbar_core(parts: Sequence[int], p: int) -> tuple[Partition, int]:
    """(core, weight) of a p-strict partition.

    Runner 0 empties completely.  On each pair of runners {i, p-i} the
    beads settle to the bottom and annihilate in pairs, leaving the
    surplus runner with |a - b| beads at heights 0..|a-b|-1.
    """
    parts = p_strict_partition(parts, p)
    counts = [0] * p
    for x in parts:
        counts[x % p] += 1
    core: list[int] = []
    for i in range(1, half(p) + 1):
        a, b = counts[i], counts[p - i]
        runner, n = (i, a - b) if a >= b else (p - i, b - a)
        core.extend(h * p + runner for h in range(n))
    core_t = tuple(sorted(core, reverse=True))
    w, rem = divmod(rank(parts) - rank(core_t), p)
    assert rem == 0
    return core_t, w


def is_core(parts: Sequence[int], p: int) -> bool:
    return not pbar_removals(parts, p)


@dataclass(frozen=True)
class CoreTuple:
    """((l_1, e_1), ..., (l_t, e_t)): bead count and side of each runner pair.

    e_i = 0 puts the beads on runner i, e_i = 1 on runner p-i; an empty
    pair is always written (0, 1).
    """

    p: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        check_modulus(self.p)
        object.__setattr__(self, "pairs", tuple((int(l), int(e)) for l, e in self.pairs))
        if len(self.pairs) != half(self.p):
            raise InvalidAbacus(f"core tuple for p={self.p} needs {half(self.p)} pairs")
        for l, e in self.pairs:
            if l < 0 or e not in (0, 1):
                raise InvalidAbacus(f"bad pair ({l}, {e})")
            if l == 0 and e != 1:
                raise InvalidAbacus("an empty runner pair must be written (0, 1)")

    @property
    def t(self) -> int:
        return len(self.pairs)

    @classmethod
    def from_pairs(cls, p: int, pairs) -> "CoreTuple":
        return cls(p, tuple(tuple(x) for x in pairs))

    @classmethod
    def normalized(cls, p: int, pairs) -> "CoreTuple":
        """Like the constructor but rewrites (0, 0) as (0, 1)."""
        return cls(p, tuple((l, 1 if l == 0 else e) for l, e in pairs))

    def to_json(self) -> list[list[int]]:
        return [[l, e] for l, e in self.pairs]

    def __str__(self) -> str:
        return ",".join(f"{l}:{e}" for l, e in self.pairs)


def core_tuple(core: Sequence[int], p: int) -> CoreTuple:
    core = p_strict_partition(core, p)
    if not is_core(core, p):
        raise NotACore(f"{core} is not a {p}-bar core")
    counts = [0] * p
    for x in core:
        counts[x % p] += 1
    pairs = []
    for i in range(1, half(p) + 1):
        if counts[i]:
            pairs.append((counts[i], 0))
        else:
            pairs.append((counts[p - i], 1))
    return CoreTuple(p, tuple(pairs))


def core_from_tuple(c: CoreTuple) -> Partition:
    p = c.p
    parts = []
    for i, (l, e) in enumerate(c.pairs, start=1):
        runner = i if e == 0 else p - i
        parts.extend(h * p + runner for h in range(l))
    return tuple(sorted(parts, reverse=True))


def rank_from_tuple(c: CoreTuple) -> int:
    p = c.p
    total = 0
    for i, (l, e) in enumerate(c.pairs, start=1):
        total += l * (i if e == 0 else p - i) + l * (l - 1) // 2 * p
    return total


def empty_tuple(p: int) -> CoreTuple:
    return CoreTuple(p, ((0, 1),) * half(p))
