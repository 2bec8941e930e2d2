import dataclasses
from fractions import Fraction
from typing import Tuple, Union

from sympy import Poly, ZZ

from btb.coxeter import AffineTypeLabel
from .rational import RationalFunction, SeriesError, X, expand, evaluate


# exponents of the exceptional spherical Weyl groups
EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


@dataclasses.dataclass(frozen=True)
class ExponentTable:
    label: AffineTypeLabel
    exponents: Tuple[int, ...]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(m + 1 for m in self.exponents)

    def to_dict(self) -> dict:
        return {"type": str(self.label), "exponents": list(self.exponents)}


def exponents_for(label: Union[AffineTypeLabel, str]) -> ExponentTable:
    """
    Exponents m_1 <= ... <= m_r of the spherical Weyl group of `label`.
    """
    if isinstance(label, str):
        label = AffineTypeLabel.parse(label)

    r = label.rank
    if label.family == "A":
        exponents = tuple(range(1, r + 1))
    elif label.family in ("B", "C"):
        exponents = tuple(range(1, 2 * r, 2))
    elif label.family == "D":
        exponents = tuple(sorted(tuple(range(1, 2 * r - 2, 2)) + (r - 1, )))
    elif (label.family, r) in EXCEPTIONAL_EXPONENTS:
        exponents = EXCEPTIONAL_EXPONENTS[(label.family, r)]
    else:
        raise SeriesError(f"No exponent table for {label}")

    return ExponentTable(label=label, exponents=exponents)


def bott_rational(table: ExponentTable) -> RationalFunction:
    """
    Poincaré series of the affine Weyl group,

        P(X) = prod_i (1 - X^(m_i + 1)) / ((1 - X) (1 - X^m_i))
    """
    if not table.exponents:
        raise SeriesError(f"Empty exponent table for {table.label}")

    one = Poly(1, X, domain=ZZ)
    numerator, denominator = one, one
    for m in table.exponents:
        numerator *= Poly(1 - X ** (m + 1), X, domain=ZZ)
        denominator *= Poly(1 - X, X, domain=ZZ) * Poly(1 - X ** m, X, domain=ZZ)

    return RationalFunction(numerator, denominator)


def poincare_series(label: Union[AffineTypeLabel, str]) -> RationalFunction:
    return bott_rational(exponents_for(label))


def absolute_tail(table: ExponentTable, q: int, cutoff: int) -> Fraction:
    """
    Exact tail sum_{k > cutoff} N(k) q^-k of the absolute series.
    """
    if q < 2:
        raise SeriesError(f"q must be >= 2, got {q}")

    rf = bott_rational(table)
    x = Fraction(1, q)
    partial = sum(
        (c * x ** k for k, c in enumerate(expand(rf, cutoff).coefficients)),
        Fraction(0),
    )
    return evaluate(rf, x) - partial
