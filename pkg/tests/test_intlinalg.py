import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from edgefano.intlinalg import (
    affine_rank,
    det_int,
    dot,
    integer_kernel,
    integer_solvable,
    matrix_rank,
    primitive,
    rational_nullspace,
    solve_exact,
    span_lattice_basis,
    vec_gcd,
)

small_ints = st.integers(min_value=-9, max_value=9)


def matrices(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def det_by_permutations(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def test_vec_gcd_and_primitive():
    assert vec_gcd([4, -6, 8]) == 2
    assert vec_gcd([0, 0]) == 0
    assert primitive([4, -6, 8]) == (2, -3, 4)
    assert primitive([0, 0, -3]) == (0, 0, -1)


@given(matrices(3, 3))
def test_det_matches_permutation_expansion(m):
    assert det_int(m) == det_by_permutations(m)


@given(matrices(4, 4))
def test_det_matches_permutation_expansion_4x4(m):
    assert det_int(m) == det_by_permutations(m)


def test_matrix_rank_basic():
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([]) == 0
    assert matrix_rank([[0, 0, 0]]) == 0


def test_affine_rank():
    # three collinear points: affine rank 1
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(5, 7)]) == 0
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2


def test_solve_exact():
    sol = solve_exact([[2, 0], [0, 4]], [1, 2])
    assert sol == (Fraction(1, 2), Fraction(1, 2))
    assert solve_exact([[1, 1], [1, 1]], [0, 1]) is None


@given(matrices(2, 4))
def test_integer_kernel_annihilates(m):
    kern = integer_kernel(m, 4)
    assert len(kern) >= 2
    for k in kern:
        assert all(dot(row, k) == 0 for row in m)


def test_integer_kernel_saturated():
    # kernel of [2, -2] must contain (1, 1), not only (2, 2)
    kern = integer_kernel([[2, -2]], 2)
    assert len(kern) == 1
    assert primitive(kern[0]) == tuple(kern[0])


def test_rational_nullspace():
    ns = rational_nullspace([[1, 1, 0]], 3)
    assert len(ns) == 2
    for v in ns:
        assert v[0] + v[1] == 0 or v[0] == v[1] == 0


def test_span_lattice_basis_saturation():
    # span of (2, 0) and (0, 2) over Q meets Z^2 in all of Z^2
    basis = span_lattice_basis([(2, 0), (0, 2)], 2)
    assert len(basis) == 2
    assert abs(det_int([list(b) for b in basis])) == 1


def test_span_lattice_basis_sublattice():
    basis = span_lattice_basis([(1, -1, 0), (0, 1, -1)], 3)
    assert len(basis) == 2
    for b in basis:
        assert sum(b) == 0


def test_integer_solvable():
    # x + y = 1 with both coords: functional (1, 0) works on (1,0),(0,1)? use rows
    assert integer_solvable([[1, 0], [0, 1]], [1, 1])
    # 2x = 1 has no integer solution
    assert not integer_solvable([[2]], [1])
    # inconsistent system
    assert not integer_solvable([[1], [1]], [0, 1])


@given(matrices(3, 3))
def test_rank_det_consistency(m):
    if det_int(m) != 0:
        assert matrix_rank(m) == 3
    else:
        assert matrix_rank(m) < 3
