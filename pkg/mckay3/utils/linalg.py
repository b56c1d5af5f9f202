"""Exact linear algebra over the integers and rationals.

Matrices are lists of rows. Nothing here touches floating point.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple, Union
from mckay3.utils.errors import AlarmError

Number = Union[int, Fraction]
Matrix = List[List[Number]]


class SingularMatrix(AlarmError):
    def message(self) -> str:
        return f"matrix of size {self.context['size']} is singular (determinant 0)"


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x?")
    cols = len(b[0]) if b else 0
    return [
        [sum((row[k] * b[k][j] for k in range(len(b))), 0) for j in range(cols)]
        for row in a
    ]


def transpose(a: Sequence[Sequence[Number]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def negate(a: Sequence[Sequence[Number]]) -> Matrix:
    return [[-v for v in row] for row in a]


def bareiss_inverse(a: Sequence[Sequence[int]]) -> Tuple[int, List[List[Fraction]]]:
    """Invert an integer matrix by fraction-free (Bareiss) elimination.

    Gauss-Jordan on the augmented matrix [A | I] in integers. Each update
    divides by the previous pivot, and that division is always exact, so after
    the last step the left block is p*I and the right block is p*A^-1 with
    p = +-det(A). Rationals only appear in the final division.

    Args:
        a: square integer matrix

    Raises:
        SingularMatrix: iff. det(a) == 0

    Returns:
        (det(a), a^-1) with the inverse entries in lowest terms.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1, []

    m = [[int(v) for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            raise SingularMatrix(size=n)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        row_k = m[k]
        pk = row_k[k]
        for i in range(n):
            if i == k:
                continue
            row_i = m[i]
            mik = row_i[k]
            m[i] = [(pk * x - mik * y) // prev for x, y in zip(row_i, row_k)]
        prev = pk

    det = sign * prev
    inverse = [[Fraction(m[i][n + j], prev) for j in range(n)] for i in range(n)]
    return det, inverse


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant; 0 for singular input instead of raising."""
    try:
        det, _ = bareiss_inverse(a)
    except SingularMatrix:
        return 0
    return det


def rank(a: Sequence[Sequence[Number]]) -> int:
    """Exact rank by row reduction over the rationals."""
    m = [[Fraction(v) for v in row] for row in a]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            if f == 0:
                continue
            f = f / p
            m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def solve(a: Sequence[Sequence[int]], b: Sequence[Sequence[Number]]) -> List[List[Fraction]]:
    """Solve A X = B exactly for square integer A."""
    _, inv = bareiss_inverse(a)
    return [[Fraction(v) for v in row] for row in matmul(inv, b)]
