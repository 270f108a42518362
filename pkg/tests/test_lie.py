import itertools
from fractions import Fraction

import pytest

from oracles import content_by_boxes
from spinblock.abacus import CoreTuple, core_from_tuple, core_tuple, empty_tuple, is_core
from spinblock.crystal import BlockLabel
from spinblock.errors import InvalidIndex, InvalidRange
from spinblock.lie import (block_weight_vector, cartan_data, coords_from_tuple, level, level_matrix,
                           reflect_weight, tuple_from_coords, weyl_reflect)
from spinblock.partitions import enumerate_strict, half
from spinblock.scopes import apply_K_tuple

C11 = [
    [2, -2, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0],
    [0, -1, 2, -1, 0, 0],
    [0, 0, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -2],
    [0, 0, 0, 0, -1, 2],
]
B11 = [
    [1, -1, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0],
    [0, -1, 2, -1, 0, 0],
    [0, 0, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -2],
    [0, 0, 0, 0, -2, 4],
]

# levels for p = 5 on -4..5 as printed, rows n_1 and columns n_2
PRINTED = [
    [20, 16, 13, 11, 10, 10, 11, 13, 16, 20],
    [16, 12, 9, 7, 6, 6, 7, 9, 12, 16],
    [13, 9, 6, 4, 3, 3, 4, 6, 9, 12],
    [11, 7, 4, 2, 1, 1, 2, 4, 7, 11],
    [10, 6, 3, 1, 0, 0, 1, 3, 6, 10],
    [10, 6, 3, 1, 0, 0, 1, 3, 6, 10],
    [11, 7, 4, 2, 1, 1, 2, 4, 7, 11],
    [13, 9, 6, 4, 3, 3, 4, 6, 9, 12],
    [16, 12, 9, 7, 6, 6, 7, 9, 12, 16],
    [20, 16, 13, 11, 10, 10, 11, 13, 16, 20],
]


def all_tuples(p, top):
    t = half(p)
    for ls in itertools.product(range(top + 1), repeat=t):
        for es in itertools.product((0, 1), repeat=t):
            if all(l > 0 or e == 1 for l, e in zip(ls, es)):
                yield CoreTuple(p, tuple(zip(ls, es)))


def test_cartan_p11():
    data = cartan_data(11)
    assert [list(r) for r in data.C] == C11
    assert [list(r) for r in data.B] == B11
    assert data.delta == (2, 2, 2, 2, 2, 1)
    assert data.c == (1, 2, 2, 2, 2, 2)
    assert data.root_lengths == (1, 2, 2, 2, 2, 4)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_cartan_null_vectors(p):
    data = cartan_data(p)
    n = data.t + 1
    assert all(sum(data.C[i][j] * data.delta[j] for j in range(n)) == 0 for i in range(n))
    assert all(sum(data.c[i] * data.C[i][j] for i in range(n)) == 0 for j in range(n))
    assert all(data.B[i][j] == data.B[j][i] for i in range(n) for j in range(n))
    assert data.B[0][0] == Fraction(1) and data.B[-1][-1] == 4


def test_cartan_p3():
    data = cartan_data(3)
    assert [list(r) for r in data.C] == [[2, -4], [-1, 2]]
    assert data.to_json()["B"] == [[1, -2], [-2, 4]]


def test_coordinate_examples():
    assert coords_from_tuple(CoreTuple(5, ((2, 0), (3, 0)))) == (2, 3)
    assert coords_from_tuple(CoreTuple(5, ((2, 0), (3, 1)))) == (2, -3)
    assert coords_from_tuple(empty_tuple(5)) == (0, 0)
    assert tuple_from_coords((0, 0), 5) == empty_tuple(5)
    with pytest.raises(InvalidRange):
        tuple_from_coords((1,), 5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_coordinate_round_trip(p):
    for c in all_tuples(p, 4):
        assert tuple_from_coords(coords_from_tuple(c), p) == c


def test_level_examples():
    assert level((2, 3)) == 4 == content_by_boxes((12, 7, 6, 2, 1), 5)[2]
    assert level((0, 0)) == level((1, 1)) == 0
    assert level((-4, -4)) == 20


@pytest.mark.parametrize("p", [3, 5, 7])
def test_level_is_last_content_entry(p):
    for n in range(41):
        for rho in enumerate_strict(n):
            if is_core(rho, p):
                assert level(coords_from_tuple(core_tuple(rho, p))) == content_by_boxes(rho, p)[-1]


def test_level_symmetries():
    for v in itertools.product(range(-5, 7), repeat=3):
        lv = level(v)
        for perm in itertools.permutations(v):
            assert level(perm) == lv
        for k in range(3):
            w = list(v)
            w[k] = 1 - w[k]
            assert level(w) == lv


def test_weyl_examples():
    assert weyl_reflect(0, (-1, 0)) == (2, 0)
    assert weyl_reflect(2, (2, 3)) == (2, -3)
    assert weyl_reflect(1, (2, 3)) == (3, 2)
    with pytest.raises(InvalidIndex):
        weyl_reflect(3, (0, 0))


def test_weyl_relations():
    for v in itertools.product(range(-3, 4), repeat=3):
        for i in range(4):
            assert weyl_reflect(i, weyl_reflect(i, v)) == v
        # adjacent middle swaps compose to a 3-cycle
        step = lambda x: weyl_reflect(2, weyl_reflect(1, x))  # noqa: E731
        assert step(step(step(v))) == v


@pytest.mark.parametrize("p", [3, 5, 7])
def test_dictionary(p):
    for c in all_tuples(p, 4):
        for i in range(half(p) + 1):
            assert coords_from_tuple(apply_K_tuple(i, c)) == weyl_reflect(i, coords_from_tuple(c))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_reflections_on_weights(p):
    # the Cartan-matrix reflection of the content is the content of K_i(c)
    for c in all_tuples(p, 3):
        gamma = content_by_boxes(core_from_tuple(c), p)
        for i in range(half(p) + 1):
            image = content_by_boxes(core_from_tuple(apply_K_tuple(i, c)), p)
            assert reflect_weight(i, gamma, p) == image


@pytest.mark.parametrize("p", [3, 5, 7])
def test_translation_along_first_axis(p):
    # alternate n -> 1 - n with moving n_1 out to the end, negating it and
    # moving it back; each round shifts n_1 by one and the weight follows
    # gamma = (n^2 - n)/2 * delta + n * alpha_0
    t = half(p)
    delta = cartan_data(p).delta
    back = list(range(1, t)) + [t] + list(range(t - 1, 0, -1))
    coords = (0,) * t
    gamma = (0,) * (t + 1)
    for _ in range(6):
        for i in [0] + back:
            coords = weyl_reflect(i, coords)
            gamma = reflect_weight(i, gamma, p)
        n = coords[0]
        assert coords[1:] == (0,) * (t - 1)
        expected = [(n * n - n) // 2 * d for d in delta]
        expected[0] += n
        assert list(gamma) == expected
        assert gamma == content_by_boxes(core_from_tuple(tuple_from_coords(coords, p)), p)


def test_block_weight_vector():
    assert block_weight_vector(BlockLabel((), 1), 5) == (2, 2, 1)
    assert block_weight_vector(BlockLabel((4, 1), 0), 5) == content_by_boxes((4, 1), 5)
    assert block_weight_vector(BlockLabel((12, 7, 6, 2, 1), 3), 5) == (19, 17, 7)


def test_level_matrix_shape():
    m = level_matrix(5, -4, 5)
    assert len(m) == 10 and all(len(r) == 10 for r in m)
    assert level_matrix(5, 0, 0) == [[0]]
    flat = level_matrix(7, 0, 1)
    assert len(flat) == 8 and flat[(1, 1, 1)] == 0
    with pytest.raises(InvalidRange):
        level_matrix(5, 2, 1)


def test_level_matrix_symmetric():
    m = level_matrix(5, -4, 5)
    for a in range(10):
        for b in range(10):
            assert m[a][b] == m[9 - a][b] == m[a][9 - b] == m[b][a]


def test_printed_matrix_differences():
    # every printed entry agrees except two cells in the last column, and
    # those two break the printed matrix's own mirror symmetry
    m = level_matrix(5, -4, 5)
    diff = [(a, b) for a in range(10) for b in range(10) if m[a][b] != PRINTED[a][b]]
    assert diff == [(2, 9), (7, 9)]
    for a, b in diff:
        assert PRINTED[a][b] == 12 and m[a][b] == 13
        assert PRINTED[b][a] == 13 and PRINTED[a][9 - b] == 13
