from __future__ import division, absolute_import, print_function

import random

from fractions import Fraction
from math import lcm

import pytest

from dswitch.core import (RatMatrix, IntPolynomial, charpoly, is_regular_orthogonal,
                          level, support_blocks, is_decomposable)
from dswitch.errors import NonSquareMatrix, NonIntegralMatrix, ShapeMismatch, FormatError
from dswitch.catalog import make, gm_matrix, wqh_matrix
from dswitch.graph import Graph

K3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def half_j_minus_i(n=4):
    return RatMatrix.ones(n) * Fraction(2, n) - RatMatrix.identity(n)


def test_identity_is_regular_orthogonal():
    assert is_regular_orthogonal(RatMatrix.identity(5))
    assert level(RatMatrix.identity(5)) == 1


def test_all_ones_is_not_regular_orthogonal():
    assert not is_regular_orthogonal(RatMatrix.ones(3))
    assert not is_regular_orthogonal(RatMatrix.ones(2, 3))


def test_level_and_scaled_int():
    R = half_j_minus_i()
    assert is_regular_orthogonal(R)
    assert level(R) == 2
    ell, M = R.scaled_int()
    assert ell == 2
    assert M[0] == [-1, 1, 1, 1]
    assert level(half_j_minus_i(6)) == 3


def test_circulant_rows_shift_right():
    C = RatMatrix.circulant([1, 2, 3])
    assert C.to_rows() == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]
    F = RatMatrix.circulant([-1, 1, 1, 0, 1, 0, 0], Fraction(1, 2))
    assert is_regular_orthogonal(F)
    assert level(F) == 2


def test_arithmetic_and_transpose():
    A = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert (A @ RatMatrix.identity(2)) == A
    assert A.T.to_rows() == [[1, 3], [2, 4]]
    assert (A - A) == RatMatrix.zeros(2)
    assert (2 * A)[1, 1] == 8
    assert (-A + A) == RatMatrix.zeros(2)
    with pytest.raises(ShapeMismatch):
        A @ RatMatrix.ones(3)
    with pytest.raises(ShapeMismatch):
        RatMatrix.from_rows([[1, 2], [3]])


def test_permuted_and_embed():
    A = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert A.permuted([1, 0]).to_rows() == [[4, 3], [2, 1]]
    Q = half_j_minus_i().embed(6, (1, 2, 3, 4))
    assert is_regular_orthogonal(Q)
    assert Q[0, 0] == 1 and Q[5, 5] == 1
    assert Q[1, 1] == Fraction(-1, 2)


def test_support_blocks_and_decomposable():
    R = half_j_minus_i()
    assert support_blocks(R) == [([0, 1, 2, 3], [0, 1, 2, 3])]
    assert not is_decomposable(R)
    D = RatMatrix.block_diag(R, R)
    assert support_blocks(D) == [([0, 1, 2, 3], [0, 1, 2, 3]),
                                 ([4, 5, 6, 7], [4, 5, 6, 7])]
    assert is_decomposable(D)
    # an identity part does not count
    assert not is_decomposable(RatMatrix.block_diag(R, RatMatrix.identity(2)))


def test_json_keeps_exact_entries():
    R = half_j_minus_i(6)
    data = R.to_json()
    assert data[0] == [-2, 3]
    assert RatMatrix.from_json(6, data) == R
    with pytest.raises(FormatError):
        RatMatrix.from_json(5, data)
    with pytest.raises(FormatError):
        RatMatrix.from_json(1, [[1, 0]])


def test_charpoly_of_triangle():
    p = charpoly(K3)
    assert p.coefficients == (-2, -3, 0, 1)
    assert str(p) == 'x^3 - 3*x - 2'
    assert p(2) == 0 and p(-1) == 0
    assert charpoly(RatMatrix.from_rows(K3)) == p


def test_charpoly_of_empty_and_zero():
    assert charpoly([]) == IntPolynomial([1])
    assert charpoly([[0, 0], [0, 0]]).coefficients == (0, 0, 1)


def test_charpoly_rejects_bad_input():
    with pytest.raises(NonSquareMatrix):
        charpoly([[1, 2]])
    with pytest.raises(NonIntegralMatrix):
        charpoly(RatMatrix.identity(2) * Fraction(1, 2))


def test_polynomial_formatting():
    assert str(IntPolynomial([])) == '0'
    assert str(IntPolynomial([0, 0, -1])) == '-x^2'
    assert str(IntPolynomial([1, 2])) == '2*x + 1'
    assert IntPolynomial([1, 0, 0]).degree == 0


@pytest.mark.parametrize('seed', range(100))
def test_charpoly_is_invariant_under_relabeling(seed):
    graph = Graph.random(8, seed)
    sigma = list(range(8))
    random.Random(seed).shuffle(sigma)
    assert charpoly(graph.relabel(sigma).adjacency()) == charpoly(graph.adjacency())


@pytest.mark.parametrize('Q1, Q2', [
    (gm_matrix(4), gm_matrix(6)),
    (gm_matrix(6), wqh_matrix(4)),
    (wqh_matrix(3), RatMatrix.identity(2)),
    (gm_matrix(8), wqh_matrix(2)),
])
def test_level_of_direct_sum(Q1, Q2):
    assert level(RatMatrix.block_diag(Q1, Q2)) == lcm(level(Q1), level(Q2))


def test_level_of_direct_sum_example():
    assert level(RatMatrix.block_diag(gm_matrix(4), gm_matrix(6))) == 6


def test_fano_method_is_indecomposable():
    R = make('Fano(4)').scheme.R
    assert is_regular_orthogonal(R)
    assert not is_decomposable(R)
