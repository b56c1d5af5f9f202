from fractions import Fraction
import numpy as np
import pytest
from mckay3.utils.linalg import SingularMatrix, bareiss_inverse, determinant, identity, matmul, rank, solve, transpose
from mckay3.utils.parallel import pmap

pytestmark = pytest.mark.unit


def test_inverse_of_skew_2x2():
    det, inv = bareiss_inverse([[0, -3], [3, 0]])
    assert det == 9
    assert inv == [[0, Fraction(1, 3)], [Fraction(-1, 3), 0]]


def test_singular_input_raises():
    with pytest.raises(SingularMatrix):
        bareiss_inverse([[1, 2], [2, 4]])
    assert determinant([[1, 2], [2, 4]]) == 0


def test_inverse_needs_row_swaps():
    a = [[0, 1, 2], [1, 0, 3], [4, -3, 8]]
    det, inv = bareiss_inverse(a)
    assert det == round(np.linalg.det(np.array(a, dtype=float)))
    assert matmul(a, inv) == identity(3)


def test_random_integer_matrices():
    rng = np.random.default_rng(7)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        a = rng.integers(-5, 6, size=(n, n)).tolist()
        expected = round(np.linalg.det(np.array(a, dtype=float)))
        if expected == 0:
            assert determinant(a) == 0
            continue
        det, inv = bareiss_inverse(a)
        assert det == expected
        assert matmul(a, inv) == identity(n)
        assert matmul(inv, a) == identity(n)


def test_rank():
    assert rank([]) == 0
    assert rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert rank([[1, 0, -1, 0], [0, 1, 0, -1], [1, 1, -1, -1]]) == 2
    assert rank(identity(4)) == 4


def test_solve_and_transpose():
    x = solve([[2, 1], [1, 1]], [[3], [2]])
    assert x == [[1], [1]]
    assert transpose([[1, 2, 3]]) == [[1], [2], [3]]


def test_pmap_preserves_order():
    items = list(range(40))
    assert pmap(lambda v: v * v, items, threads=4) == [v * v for v in items]
    assert pmap(lambda v: v + 1, items) == [v + 1 for v in items]
