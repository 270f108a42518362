"""Path counting between Young diagrams and brute-force verification of
w-compatible pairs, plus the multiplicity formulas that consume them."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Sequence

from .abacus import is_core, pbar_core
from .errors import BudgetExceeded, InconsistentParities, NotACore, PreconditionError
from .partitions import Partition, enumerate_strict, parity, strict_partition
from .scopes import apply_K


def _contains(big: Sequence[int], small: Sequence[int]) -> bool:
    if len(small) > len(big):
        return False
    return all(a >= b for a, b in zip(big, small))


def _strict_removals(lam: Partition):
    """Strict partitions obtained by deleting one box from a strict lam."""
    n = len(lam)
    for r in range(n):
        x = lam[r] - 1
        # the row below must stay strictly shorter; a row of length 1 vanishes
        if r + 1 < n and lam[r + 1] >= x:
            continue
        if x == 0:
            yield lam[:r]
        else:
            yield lam[:r] + (x,) + lam[r + 1:]


@lru_cache(maxsize=200_000)
def _paths(lam: Partition, chi: Partition) -> int:
    if lam == chi:
        return 1
    if sum(lam) <= sum(chi):
        return 0
    return sum(_paths(mu, chi) for mu in _strict_removals(lam) if _contains(mu, chi))


def count_paths(lam: Sequence[int], chi: Sequence[int]) -> int:
    """Number of ways to strip lam down to chi one box at a time with
    every intermediate diagram a strict partition."""
    lam = strict_partition(lam)
    chi = strict_partition(chi)
    if not _contains(lam, chi):
        return 0
    return _paths(lam, chi)


def paths_to_rank(lam: Partition, m: int) -> dict[Partition, int]:
    """Path counts from lam to every strict partition of rank m below it."""
    layer = {lam: 1}
    for _ in range(sum(lam) - m):
        nxt: dict[Partition, int] = {}
        for mu, k in layer.items():
            for nu in _strict_removals(mu):
                nxt[nu] = nxt.get(nu, 0) + k
        layer = nxt
    return layer


def count_paths_closed(nu: Sequence[int], mu: Sequence[int], i: int, p: int) -> int:
    """alpha! for i != 0 and alpha!/2^((alpha-1)/2) for i = 0, alpha = |nu|-|mu|."""
    nu = strict_partition(nu)
    mu = strict_partition(mu)
    if apply_K(i, nu, p) != mu:
        raise PreconditionError(f"{mu} is not K_{i}({nu})")
    alpha = sum(nu) - sum(mu)
    if alpha <= 0:
        raise PreconditionError("K_i must lower the rank")
    if i != 0:
        return factorial(alpha)
    if alpha % 2 == 0:
        raise PreconditionError("K_0 always changes the rank by an odd amount")
    return factorial(alpha) // 2 ** ((alpha - 1) // 2)


def pair_insertion_cost(n_pairs: int, beads: int) -> int:
    """p-bar additions needed to insert n pairs of beads on runners i, p-i
    above a core carrying ``beads`` beads on that runner pair."""
    if n_pairs < 0 or beads < 0:
        raise ValueError("counts must be nonnegative")
    return n_pairs * n_pairs + beads * n_pairs


@dataclass
class CompatibilityReport:
    nu: Partition
    mu: Partition
    i: int
    w: int
    p: int
    n_source: int = 0
    n_target: int = 0
    cond1: bool = True
    cond2_checked: int = 0
    cond2_failures: list[dict] = field(default_factory=list)
    cond3: bool = True
    cond3_failures: list[Partition] = field(default_factory=list)
    beta: int = 1
    trivial: bool = False
    elapsed: float = 0.0

    @property
    def cond2(self) -> bool:
        return not self.cond2_failures

    @property
    def passed(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "mu": list(self.mu),
            "i": self.i,
            "w": self.w,
            "p": self.p,
            "trivial": self.trivial,
            "cond1": self.cond1,
            "cond2": {
                "checked": self.cond2_checked,
                "failures": [dict(f) for f in self.cond2_failures],
            },
            "cond3": self.cond3,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
        }


def block_members(core: Partition, w: int, p: int) -> list[Partition]:
    """Strict partitions with the given core and weight."""
    n = sum(core) + p * w
    return [lam for lam in enumerate_strict(n) if pbar_core(lam, p) == (core, w)]


def verify_w_compatible(nu: Sequence[int], i: int, w: int, p: int, budget: int = 2_000_000,
                        max_failures: int = 20) -> CompatibilityReport:
    """Check the three conditions of a w-compatible pair (nu, K_i(nu)) by
    enumerating both blocks.  ``budget`` caps the number of (lambda, chi)
    path-count evaluations."""
    start = time.perf_counter()
    nu = strict_partition(nu)
    if not is_core(nu, p):
        raise NotACore(f"{nu} is not a {p}-bar core")
    mu = apply_K(i, nu, p)
    report = CompatibilityReport(nu, mu, i, w, p)
    if mu == nu:
        # no rank drop, so there is nothing to compare
        report.trivial = True
        report.elapsed = time.perf_counter() - start
        return report
    alpha = sum(nu) - sum(mu)
    if alpha < 0:
        raise PreconditionError(f"K_{i} raises the rank of {nu}; swap the roles of the cores")
    source = block_members(nu, w, p)
    target = block_members(mu, w, p)
    report.n_source, report.n_target = len(source), len(target)
    if len(source) * len(target) > budget:
        raise BudgetExceeded(f"{len(source)} x {len(target)} pairs exceed budget {budget}")
    target_set = set(target)

    images = [apply_K(i, lam, p) for lam in source]
    report.cond1 = len(set(images)) == len(source) and set(images) == target_set

    beta = count_paths(nu, mu)
    report.beta = beta
    m = sum(mu) + p * w
    for lam, image in zip(source, images):
        reach = paths_to_rank(lam, m)
        for chi in target:
            got = reach.get(chi, 0)
            want = beta if chi == image else 0
            report.cond2_checked += 1
            if got != want and len(report.cond2_failures) < max_failures:
                report.cond2_failures.append(
                    {"lambda": list(lam), "chi": list(chi), "count": got, "expected": want})
        if (parity(lam) + parity(image)) % 2 != (parity(nu) + parity(mu)) % 2:
            report.cond3 = False
            report.cond3_failures.append(lam)
    report.elapsed = time.perf_counter() - start
    return report


def branching_multiplicity(alpha: int, eps_alpha: int, eps_lambda: int, eps_chi: int, beta: int) -> int:
    """Multiplicity of theta_lambda in the induced theta_chi, restricted to
    the block pair: 2^((alpha - e(alpha) - e(lambda) - e(chi))/2) * beta,
    and 1 when alpha = 1."""
    if alpha < 1 or beta < 0:
        raise ValueError("alpha must be positive and beta nonnegative")
    if eps_alpha != alpha % 2:
        raise InconsistentParities(f"eps(alpha) must be {alpha % 2} for alpha={alpha}")
    if alpha == 1:
        if beta != 1:
            raise InconsistentParities("alpha = 1 forces beta = 1")
        return 1
    exponent = alpha - eps_alpha - eps_lambda - eps_chi
    if exponent % 2 or exponent < 0:
        raise InconsistentParities(
            f"exponent ({alpha}-{eps_alpha}-{eps_lambda}-{eps_chi})/2 is not a nonnegative integer")
    return 2 ** (exponent // 2) * beta


def multiplicity_row_sum(alpha: int, beta: int) -> int:
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive")
    return 2 ** ((alpha - alpha % 2) // 2) * beta


def idempotent_count(alpha: int, beta: int) -> int:
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive")
    if alpha % 2:
        return 2 ** ((alpha - 1) // 2) * beta
    return 2 ** (alpha // 2) * beta
