"""Twisted affine root data and the coordinate picture of cores.

A core with tuple ((l_1, e_1), ..., (l_t, e_t)) sits at the lattice point
n_i = (-1)^e_i * l_i.  Scopes involutions become simple reflections on
these coordinates and the level gamma_t becomes sum n_i (n_i - 1) / 2.
Weights Lambda_0 - sum gamma_i alpha_i are carried as the vector gamma.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .abacus import CoreTuple, core_from_tuple
from .crystal import BlockLabel
from .errors import InvalidIndex, InvalidRange
from .partitions import check_modulus, content, half


@dataclass(frozen=True)
class CartanData:
    t: int
    C: tuple[tuple[int, ...], ...]
    B: tuple[tuple[Fraction, ...], ...]
    delta: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def root_lengths(self) -> tuple[Fraction, ...]:
        return tuple(self.B[k][k] for k in range(self.t + 1))

    def to_json(self) -> dict:
        def num(x):
            return int(x) if Fraction(x).denominator == 1 else str(x)

        return {
            "t": self.t,
            "C": [list(r) for r in self.C],
            "B": [[num(x) for x in r] for r in self.B],
            "delta": list(self.delta),
            "c": list(self.c),
        }


def cartan_data(p: int) -> CartanData:
    """Cartan matrix of the twisted affine algebra attached to p, rows and
    columns indexed 0..t, with entry [i][j] = <alpha_j, h_i>."""
    check_modulus(p)
    t = half(p)
    n = t + 1
    C = [[0] * n for _ in range(n)]
    for k in range(n):
        C[k][k] = 2
        if k > 0:
            C[k][k - 1] = -1
        if k < t:
            C[k][k + 1] = -1
    C[0][1] = -2
    C[t - 1][t] -= 1
    if t == 1:
        # both double bonds land in the same entry
        C[0][1] = -4
    delta = tuple([2] * t + [1])
    cvec = tuple([1] + [2] * t)
    # row k of B is C row k scaled by c_k / delta_k
    B = tuple(tuple(Fraction(cvec[k], delta[k]) * C[k][j] for j in range(n)) for k in range(n))
    return CartanData(t, tuple(tuple(r) for r in C), B, delta, cvec)


def coords_from_tuple(c: CoreTuple) -> tuple[int, ...]:
    return tuple(-l if e else l for l, e in c.pairs)


def tuple_from_coords(coords: Sequence[int], p: int) -> CoreTuple:
    check_modulus(p)
    if len(coords) != half(p):
        raise InvalidRange(f"need {half(p)} coordinates for p={p}")
    return CoreTuple(p, tuple((abs(n), 0 if n > 0 else 1) for n in coords))


def level(coords: Sequence[int]) -> int:
    return sum(n * (n - 1) // 2 for n in coords)


def weyl_reflect(i: int, coords: Sequence[int]) -> tuple[int, ...]:
    """Simple reflection r_{alpha_i} on coordinates n_1..n_t."""
    t = len(coords)
    if not 0 <= i <= t:
        raise InvalidIndex(f"reflection index must lie in 0..{t}, got {i}")
    v = list(coords)
    if i == 0:
        v[0] = 1 - v[0]
    elif i < t:
        v[i - 1], v[i] = v[i], v[i - 1]
    else:
        v[t - 1] = -v[t - 1]
    return tuple(v)


def reflect_weight(i: int, gamma: Sequence[int], p: int) -> tuple[int, ...]:
    """s_i applied to the weight Lambda_0 - sum gamma_j alpha_j, returned
    as its new gamma.  Uses only the Cartan matrix."""
    C = cartan_data(p).C
    pairing = (1 if i == 0 else 0) - sum(C[i][j] * gamma[j] for j in range(len(gamma)))
    out = list(gamma)
    out[i] += pairing
    return tuple(out)


def block_weight_vector(b: BlockLabel, p: int) -> tuple[int, ...]:
    """gamma of the block: content of the core plus w copies of delta."""
    delta = cartan_data(p).delta
    return tuple(g + b.weight * d for g, d in zip(content(b.core, p), delta))


def level_of_tuple(c: CoreTuple) -> int:
    return level(coords_from_tuple(c))


def level_matrix(p: int, lo: int, hi: int):
    """Levels on the box lo <= n_i <= hi.

    For t = 2 the result is a list of rows, row n_1 and column n_2.  For
    other t it is a dict keyed by coordinate tuples.
    """
    check_modulus(p)
    if lo > hi:
        raise InvalidRange(f"empty range {lo}..{hi}")
    t = half(p)
    axis = range(lo, hi + 1)
    if t == 2:
        return [[level((a, b)) for b in axis] for a in axis]
    return {v: level(v) for v in itertools.product(axis, repeat=t)}


def core_of_coords(coords: Sequence[int], p: int):
    return core_from_tuple(tuple_from_coords(coords, p))
