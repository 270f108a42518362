import random

import pytest
from hypothesis import given, strategies as st

from oracles import count_paths_upward, minimal_pair_insertion, random_strict, simulate_pair_insertion
from spinblock.abacus import core_tuple, is_core, pbar_core
from spinblock.compat import (block_members, branching_multiplicity, count_paths, count_paths_closed,
                              idempotent_count, multiplicity_row_sum, pair_insertion_cost,
                              verify_w_compatible)
from spinblock.errors import BudgetExceeded, InconsistentParities, NotACore, PreconditionError
from spinblock.partitions import enumerate_strict, half, parity
from spinblock.scopes import apply_K, is_w_allowed

RHO = (12, 7, 6, 2, 1)


def cores_up_to(p, n):
    return [lam for m in range(n + 1) for lam in enumerate_strict(m) if is_core(lam, p)]


def test_count_paths_examples():
    assert count_paths(RHO, RHO) == 1
    assert count_paths(RHO, (11, 7, 6, 2, 1)) == 1
    assert count_paths(RHO, (12, 7, 4, 2)) == 3
    assert count_paths((3, 1), (4,)) == 0
    assert count_paths((2, 1), (3,)) == 0


@pytest.mark.parametrize("pair", [((5, 2, 1), (2, 1)), ((6, 3, 1), (3, 1)), ((7, 4, 1), (5, 2)),
                                  ((6, 4, 2, 1), (4, 2)), ((8, 5, 3), (5, 2))])
def test_count_paths_matches_upward_count(pair):
    lam, chi = pair
    assert count_paths(lam, chi) == count_paths_upward(lam, chi)


def test_closed_form_examples():
    assert count_paths_closed(RHO, (11, 7, 6, 2, 1), 1, 5) == 1
    assert count_paths_closed(RHO, (12, 7, 4, 2), 0, 5) == 3
    assert count_paths_closed((7, 4, 1), (5, 2), 0, 3) == 30 == count_paths((7, 4, 1), (5, 2))
    with pytest.raises(PreconditionError):
        count_paths_closed((12, 7, 4, 2), RHO, 0, 5)
    with pytest.raises(PreconditionError):
        count_paths_closed(RHO, (11, 7, 6, 2), 1, 5)


@pytest.mark.parametrize("p", [3, 5])
def test_closed_form_agrees_with_search(p):
    for nu in cores_up_to(p, 25):
        for i in range(half(p) + 1):
            mu = apply_K(i, nu, p)
            if sum(mu) < sum(nu):
                assert count_paths(nu, mu) == count_paths_closed(nu, mu, i, p)


def test_pair_insertion_examples():
    assert pair_insertion_cost(1, 4) == 5
    assert pair_insertion_cost(0, 7) == 0
    assert pair_insertion_cost(2, 3) == 10


@pytest.mark.parametrize("p", [3, 5, 7])
def test_pair_insertion_oracles(p):
    for i in range(1, half(p) + 1):
        for n in range(6):
            for l in range(6):
                cost = pair_insertion_cost(n, l)
                assert cost == minimal_pair_insertion(n, l, i, p)
                assert cost == simulate_pair_insertion(n, l, i, p)


def test_verify_example_passes():
    rep = verify_w_compatible(RHO, 1, 1, 5)
    assert rep.passed and not rep.trivial
    assert rep.n_source == rep.n_target > 0
    js = rep.to_json()
    assert set(js) == {"nu", "mu", "i", "w", "p", "trivial", "cond1", "cond2", "cond3", "passed", "elapsed"}


def test_verify_trivial():
    # equal pairs on runners 1 and 2: K_1 fixes the core
    nu = (7, 6, 2, 1)
    assert apply_K(1, nu, 5) == nu
    rep = verify_w_compatible(nu, 1, 2, 5)
    assert rep.trivial and rep.passed


def test_verify_failure_witness():
    # K_0 at (1) is not 1-allowed for p = 3; (4) reaches (3) once but (3)
    # is not the image of (4)
    assert not is_w_allowed(0, core_tuple((1,), 3), 1)
    rep = verify_w_compatible((1,), 0, 1, 3)
    assert rep.cond1
    assert not rep.passed
    assert {"lambda": [4], "chi": [3], "count": 1, "expected": 0} in rep.cond2_failures


def test_verify_preconditions():
    with pytest.raises(NotACore):
        verify_w_compatible((6,), 0, 1, 5)
    with pytest.raises(PreconditionError):
        verify_w_compatible((12, 7, 4, 2), 0, 1, 5)
    with pytest.raises(BudgetExceeded):
        verify_w_compatible(RHO, 1, 2, 5, budget=5)


@pytest.mark.parametrize("p,cap", [(3, 24), (5, 20)])
def test_allowed_pairs_pass(p, cap):
    for nu in cores_up_to(p, cap):
        c = core_tuple(nu, p)
        for w in range(1, (cap - sum(nu)) // p + 1):
            for i in range(half(p) + 1):
                mu = apply_K(i, nu, p)
                if sum(mu) < sum(nu) and is_w_allowed(i, c, w):
                    assert verify_w_compatible(nu, i, w, p).passed, (nu, i, w)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_parity_condition_random_blocks(p):
    # K_i keeps runner 0 fixed, so parities shift by the same amount
    # across a block, whatever w is
    rng = random.Random(7 * p)
    for _ in range(300):
        lam = random_strict(36, rng)
        core, w = pbar_core(lam, p)
        for i in range(half(p) + 1):
            lhs = (parity(lam) + parity(apply_K(i, lam, p))) % 2
            rhs = (parity(core) + parity(apply_K(i, core, p))) % 2
            assert lhs == rhs


def test_block_members():
    members = block_members((), 1, 5)
    assert set(members) == {(5,), (4, 1), (3, 2)}


def test_branching_examples():
    assert branching_multiplicity(2, 0, 0, 0, 1) == 2
    assert branching_multiplicity(3, 1, 1, 1, 1) == 1
    assert branching_multiplicity(1, 1, 0, 1, 1) == 1
    with pytest.raises(InconsistentParities):
        branching_multiplicity(2, 0, 1, 0, 1)
    with pytest.raises(InconsistentParities):
        branching_multiplicity(3, 0, 0, 0, 1)


def test_row_sum_and_idempotents():
    assert multiplicity_row_sum(1, 1) == idempotent_count(1, 1) == 1
    assert multiplicity_row_sum(2, 1) == idempotent_count(2, 1) == 2
    assert multiplicity_row_sum(3, 3) == idempotent_count(3, 3) == 6


@given(st.integers(1, 40), st.integers(1, 1000))
def test_row_sum_equals_idempotents(alpha, beta):
    assert multiplicity_row_sum(alpha, beta) == idempotent_count(alpha, beta)
