"""Strict and p-strict partitions, p-bar residues, content and parity.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty tuple is the empty partition.  Functions validate their
input and raise :class:`InvalidPartition` instead of guessing.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidModulus, InvalidPartition

Partition = tuple[int, ...]


def check_modulus(p: int) -> int:
    """Return ``p`` if it is an odd prime, else raise InvalidModulus."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise InvalidModulus(f"modulus must be an odd prime, got {p!r}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise InvalidModulus(f"modulus must be an odd prime, got {p}")
        d += 2
    return p


def half(p: int) -> int:
    """t = (p-1)/2, the number of residue pairs {i, p-i}."""
    return (p - 1) // 2


def _as_tuple(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    for x in parts:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise InvalidPartition(f"parts must be positive integers: {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise InvalidPartition(f"parts must be decreasing: {parts}")
    return parts


def is_strict(parts: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(parts, parts[1:])) and all(x > 0 for x in parts)


def is_p_strict(parts: Sequence[int], p: int) -> bool:
    """Weakly decreasing, positive, and only multiples of p may repeat."""
    if any(x <= 0 for x in parts):
        return False
    for a, b in zip(parts, parts[1:]):
        if a < b or (a == b and a % p != 0):
            return False
    return True


def strict_partition(parts: Iterable[int]) -> Partition:
    """Validate and return a strict partition."""
    parts = _as_tuple(parts)
    if not is_strict(parts):
        raise InvalidPartition(f"not a strict partition: {parts}")
    return parts


def p_strict_partition(parts: Iterable[int], p: int) -> Partition:
    """Validate and return a p-strict partition."""
    check_modulus(p)
    parts = _as_tuple(parts)
    if not is_p_strict(parts, p):
        raise InvalidPartition(f"not a {p}-strict partition: {parts}")
    return parts


def rank(parts: Sequence[int]) -> int:
    return sum(parts)


def pbar_residue(m: int, p: int) -> int:
    """The p-bar residue of a nonnegative integer.

    Reading m = 0, 1, 2, ... gives 0, 1, ..., t, ..., 1, 0, 0, 1, ...
    """
    check_modulus(p)
    if m < 0:
        raise ValueError(f"residue is defined for m >= 0, got {m}")
    r = m % p
    return r if r <= half(p) else p - 1 - r


def node_residue(col: int, p: int) -> int:
    """Residue of the box in (1-indexed) column ``col`` of any row."""
    return pbar_residue(col - 1, p)


def content(parts: Sequence[int], p: int) -> tuple[int, ...]:
    """(gamma_0, ..., gamma_t): number of boxes of each residue."""
    parts = p_strict_partition(parts, p)
    t = half(p)
    # residue counts of one full period of columns, then the remainder
    period = [0] * (t + 1)
    for c in range(p):
        period[pbar_residue(c, p)] += 1
    gamma = [0] * (t + 1)
    for row in parts:
        q, r = divmod(row, p)
        for i in range(t + 1):
            gamma[i] += q * period[i]
        for c in range(r):
            gamma[pbar_residue(c, p)] += 1
    return tuple(gamma)


def parity(parts: Sequence[int]) -> int:
    """epsilon(lambda) = (|lambda| + number of parts) mod 2."""
    return (sum(parts) + len(parts)) % 2


def block_parity(core: Sequence[int], w: int) -> int:
    """Parity attached to the block core^w: the core parity shifted by w.

    Individual members can differ from it: adding a new part p changes
    both the size and the number of parts, so the parity stays put.
    """
    if w < 0:
        raise ValueError("weight must be nonnegative")
    return (parity(core) + w) % 2


def is_p_restricted(parts: Sequence[int], p: int) -> bool:
    """Consecutive differences are at most p, and equal p only below a
    part not divisible by p.  The last part is compared against 0."""
    parts = p_strict_partition(parts, p)
    extended = parts + (0,)
    for a, b in zip(extended, extended[1:]):
        gap = a - b
        if gap > p or (gap == p and a % p == 0):
            return False
    return True


def _strict_below(n: int, largest: int) -> list[Partition]:
    # strict partitions of n with all parts <= largest, lexicographically decreasing
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        # remaining parts are < first; their max possible sum is first*(first-1)/2
        if first * (first + 1) // 2 < n:
            break
        for rest in _strict_below(n - first, first - 1):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _enumerate_strict(n: int) -> tuple[Partition, ...]:
    return tuple(_strict_below(n, n))


def enumerate_strict(n: int) -> list[Partition]:
    """All strict partitions of n, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_enumerate_strict(n))


def enumerate_p_strict(n: int, p: int) -> list[Partition]:
    """All p-strict partitions of n (repeated multiples of p allowed)."""
    check_modulus(p)

    def rec(m: int, largest: int) -> list[Partition]:
        if m == 0:
            return [()]
        out = []
        for first in range(min(m, largest), 0, -1):
            nxt = first if first % p == 0 else first - 1
            for rest in rec(m - first, nxt):
                out.append((first,) + rest)
        return out

    return rec(n, n)
