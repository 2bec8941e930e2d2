"""
Homothety classes of Z_p-lattices in Q_p^n, the vertices of the building.

A class is stored by its canonical basis: the representative L with
L ⊆ Z_p^n and L ⊄ pZ_p^n, brought to upper triangular column Hermite form
with diagonal entries p^a_i and entry (i, j), j > i, reduced into [0, p^a_i).
"""
import dataclasses
import math
from fractions import Fraction
from typing import Tuple, List, Sequence, Iterable, Union

import numpy as np

from btb.util.padic import (
    to_matrix, valuation, matrix_valuation, residue, exact_det, exact_inverse,
    determinantal_exponents,
)
from .context import PrimeContext, PrecisionError


class SingularMatrixError(ZeroDivisionError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class LatticeClass:
    hnf: Tuple[Tuple[int, ...], ...]
    p: int

    def __repr__(self):
        return f"LatticeClass({list(map(list, self.hnf))})"

    @property
    def n(self) -> int:
        return len(self.hnf)

    @property
    def matrix(self) -> np.ndarray:
        """
        Basis columns as an object array of Fractions
        """
        return to_matrix(self.hnf)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(valuation(self.hnf[i][i], self.p) for i in range(self.n))

    @property
    def label(self) -> int:
        return sum(self.exponents) % self.n

    def to_dict(self) -> dict:
        return {"hnf": [list(row) for row in self.hnf], "label": self.label}


def _int_valuation(x: int, p: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v


def hermite_form(columns: Sequence[Sequence[int]], p: int, precision: int) -> List[List[int]]:
    """
    Upper triangular basis of span(columns) + p^precision Z_p^n.

    `columns` are integer vectors (p-integral entries already reduced
    to integers). Rows are eliminated from the bottom up, the pivot of a row
    is a column of minimal valuation in that row.
    Returns the basis as a list of rows.
    """
    modulus = p ** precision
    n = len(columns[0]) if columns else 0
    cols = [[int(x) % modulus for x in c] for c in columns]
    basis = [None] * n

    for i in reversed(range(n)):
        cols = [c for c in cols if any(c[:i + 1])]
        pivot_index, pivot_val = None, precision
        for k, c in enumerate(cols):
            v = _int_valuation(c[i], p, precision)
            if v < pivot_val:
                pivot_index, pivot_val = k, v

        if pivot_index is None:
            pivot = [0] * n
            pivot[i] = modulus
            basis[i] = pivot
            continue

        pivot = cols.pop(pivot_index)
        unit = pivot[i] // p ** pivot_val
        inv = pow(unit, -1, modulus)
        pivot = [x * inv % modulus for x in pivot]
        pivot[i] = p ** pivot_val

        rest = []
        for c in cols:
            if c[i]:
                factor = c[i] // pivot[i]
                c = [(a - factor * b) % modulus for a, b in zip(c, pivot)]
            rest.append(c)
        # p^(precision - a) * pivot is an element with zero entry in row i
        rest.append([x * p ** (precision - pivot_val) % modulus for x in pivot])
        cols = rest
        basis[i] = pivot

    # reduce above-diagonal entries into [0, p^a_i)
    for j in range(n):
        for i in reversed(range(j)):
            factor = basis[j][i] // basis[i][i]
            if factor:
                basis[j] = [a - factor * b for a, b in zip(basis[j], basis[i])]

    return [[basis[j][i] for j in range(n)] for i in range(n)]


def containment_exponent(hnf: np.ndarray, p: int) -> int:
    """
    Smallest e >= 0 with p^e Z_p^n inside the lattice spanned by the columns of `hnf`.
    """
    return max(0, -matrix_valuation(exact_inverse(hnf), p))


def lattice_class(generators: Union[np.ndarray, Iterable[Iterable]], ctx: PrimeContext) -> LatticeClass:
    """
    Canonical class of the lattice spanned by the columns of `generators`.

    `generators` is an n x k matrix of rationals (k >= n) spanning a full rank lattice.
    """
    matrix = generators if isinstance(generators, np.ndarray) else to_matrix(generators)
    n, k = matrix.shape
    if n != ctx.n:
        raise ValueError(f"Expected {ctx.n} rows, got {n}")

    v = matrix_valuation(matrix, ctx.p)
    if v == math.inf:
        raise SingularMatrixError("Zero generator matrix")

    scale = Fraction(ctx.p) ** -v
    modulus = ctx.modulus
    columns = [
        [residue(matrix[i, j] * scale, modulus, ctx.p) for i in range(n)]
        for j in range(k)
    ]
    hnf = hermite_form(columns, ctx.p, ctx.precision)

    exponent = containment_exponent(to_matrix(hnf), ctx.p)
    if exponent >= ctx.precision:
        raise PrecisionError(
            f"Lattice needs p-adic precision > {exponent}, context has {ctx.precision}"
        )

    return LatticeClass(hnf=tuple(tuple(row) for row in hnf), p=ctx.p)


def standard_lattice(k: int, ctx: PrimeContext) -> LatticeClass:
    """
    L_k = sum_{i <= n-k} Z_p e_i + sum_{i > n-k} pZ_p e_i
    """
    n = ctx.n
    return lattice_class(
        [[(ctx.p if i >= n - k else 1) if i == j else 0 for j in range(n)] for i in range(n)],
        ctx,
    )


def vertex_label(lattice: LatticeClass, ctx: PrimeContext) -> int:
    """
    Sum of the elementary divisor exponents of L inside Z_p^n, mod n.
    """
    if lattice.p != ctx.p or lattice.n != ctx.n:
        raise ValueError(f"{lattice} does not belong to {ctx}")
    return lattice.label


def apartment_vertex(exponents: Sequence[int], ctx: PrimeContext) -> LatticeClass:
    """
    The class [sum p^m_i e_i] of the standard apartment.
    """
    if len(exponents) != ctx.n:
        raise ValueError(f"Expected {ctx.n} exponents, got {len(exponents)}")
    low = min(exponents)
    return lattice_class(
        [[ctx.p ** (m - low) if i == j else 0 for j, _ in enumerate(exponents)]
         for i, m in enumerate(exponents)],
        ctx,
    )


def relative_exponents(lattice: LatticeClass, other: LatticeClass) -> List[int]:
    """
    Elementary divisor exponents of `other` relative to `lattice`
    """
    return determinantal_exponents(exact_inverse(lattice.matrix) @ other.matrix, lattice.p)


def vertex_distance(lattice: LatticeClass, other: LatticeClass, ctx: PrimeContext) -> int:
    """
    Distance in the vertex graph, max - min of the relative exponents.
    """
    exponents = relative_exponents(lattice, other)
    return max(exponents) - min(exponents)


def contains(outer: np.ndarray, inner: np.ndarray, p: int) -> bool:
    """
    True if the lattice spanned by the columns of `inner` lies in the one spanned by `outer`
    """
    return matrix_valuation(exact_inverse(outer) @ inner, p) >= 0


def index_exponent(outer: np.ndarray, inner: np.ndarray, p: int) -> int:
    """
    log_p of the index [outer : inner] for inner ⊆ outer
    """
    return valuation(exact_det(inner), p) - valuation(exact_det(outer), p)


def act_on_lattice(g: np.ndarray, lattice: LatticeClass, ctx: PrimeContext) -> LatticeClass:
    if exact_det(g) == 0:
        raise SingularMatrixError(f"Singular matrix {g.tolist()}")
    return lattice_class(g @ lattice.matrix, ctx)
