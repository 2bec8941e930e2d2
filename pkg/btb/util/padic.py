"""
Exact helpers for p-adic linear algebra on rational matrices.

Matrices are numpy arrays of ``dtype=object`` holding ``int`` or
``Fraction`` entries.
"""
import itertools
import math
from fractions import Fraction
from typing import List, Union, Iterable

import numpy as np

Rational = Union[int, Fraction]


def to_matrix(rows: Iterable[Iterable[Rational]]) -> np.ndarray:
    """
    Convert nested sequences into an object array of Fractions.
    """
    return np.array(
        [[Fraction(v) for v in row] for row in rows],
        dtype=object,
    )


def identity_matrix(n: int) -> np.ndarray:
    return to_matrix([[int(i == j) for j in range(n)] for i in range(n)])


def valuation(x: Rational, p: int) -> Union[int, float]:
    """
    p-adic valuation of a rational, `math.inf` for zero
    """
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def matrix_valuation(matrix: np.ndarray, p: int) -> Union[int, float]:
    """
    Minimal valuation of all entries
    """
    return min((valuation(x, p) for x in matrix.flat), default=math.inf)


def residue(x: Rational, modulus: int, p: int) -> int:
    """
    Integer representative in `[0, modulus)` of a p-integral rational.

    `modulus` must be a power of `p`.
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def exact_det(matrix: np.ndarray) -> Fraction:
    """
    Determinant by fraction-exact gaussian elimination
    """
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def exact_inverse(matrix: np.ndarray) -> np.ndarray:
    """
    Gauss-Jordan inverse over the rationals.

    Raises `ZeroDivisionError` for singular input.
    """
    n = matrix.shape[0]
    m = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return np.array([row[n:] for row in m], dtype=object)


def determinantal_exponents(matrix: np.ndarray, p: int) -> List[int]:
    """
    Exponents e_1 <= ... <= e_n of the elementary divisors p^{e_i}
    of an invertible rational matrix over Z_p.

    Uses determinantal divisors: the minimal valuation d_k of all k x k minors
    satisfies d_k = e_1 + ... + e_k.
    """
    n = matrix.shape[0]
    previous = 0
    exponents = []
    for k in range(1, n + 1):
        d_k = math.inf
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                minor = exact_det(matrix[np.ix_(rows, cols)])
                d_k = min(d_k, valuation(minor, p))
        if d_k == math.inf:
            raise ZeroDivisionError("singular matrix")
        exponents.append(d_k - previous)
        previous = d_k
    return exponents


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))
