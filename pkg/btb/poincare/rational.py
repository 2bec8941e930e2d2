"""
Exact univariate rational functions with integer coefficients.
"""
import dataclasses
import math
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import sympy
from sympy import Poly, ZZ

Rational = Union[int, Fraction]

X = sympy.Symbol("X")


class PoleError(ZeroDivisionError):
    pass


class SeriesError(ValueError):
    pass


def polynomial(coefficients: Sequence[int]) -> Poly:
    """
    Integer polynomial in X from coefficients c_0, c_1, ... (lowest degree first)
    """
    return Poly(list(reversed([int(c) for c in coefficients])) or [0], X, domain=ZZ)


def coefficients(poly: Poly) -> List[int]:
    """
    Coefficients c_0, c_1, ... of an integer polynomial, lowest degree first
    """
    return [int(c) for c in reversed(poly.all_coeffs())]


def _horner(coeffs: Sequence[int], x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * x + c
    return value


class RationalFunction:
    """
    numerator / denominator in lowest terms over Z.

    The integer content of the pair is removed and the sign is fixed so that
    the constant term of the denominator is positive (the leading coefficient,
    if the constant term vanishes). Two equal functions therefore have
    identical coefficient lists.
    """
    def __init__(self, numerator: Poly, denominator: Poly):
        if denominator.is_zero:
            raise PoleError("Denominator of a rational function must be nonzero")

        if numerator.is_zero:
            numerator, denominator = polynomial([0]), polynomial([1])
        else:
            g = numerator.gcd(denominator)
            numerator, denominator = numerator.exquo(g), denominator.exquo(g)
            content = math.gcd(int(numerator.content()), int(denominator.content()))
            if content > 1:
                numerator, denominator = numerator.exquo_ground(content), denominator.exquo_ground(content)

            c0 = denominator.coeff_monomial(1)
            if (c0 if c0 else denominator.LC()) < 0:
                numerator, denominator = -numerator, -denominator

        self.numerator: Poly = numerator
        self.denominator: Poly = denominator

    @classmethod
    def from_coefficients(cls, numerator: Sequence[int], denominator: Sequence[int]) -> "RationalFunction":
        return cls(polynomial(numerator), polynomial(denominator))

    def __repr__(self):
        return f"{self.__class__.__name__}({self})"

    def __str__(self):
        return f"({self.numerator.as_expr()})/({self.denominator.as_expr()})"

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    @property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(coefficients(self.numerator)), tuple(coefficients(self.denominator))

    def numerator_coefficients(self) -> List[int]:
        return coefficients(self.numerator)

    def denominator_coefficients(self) -> List[int]:
        return coefficients(self.denominator)

    def to_dict(self) -> dict:
        return {
            "numerator": self.numerator_coefficients(),
            "denominator": self.denominator_coefficients(),
        }


@dataclasses.dataclass(frozen=True)
class SeriesTruncation:
    """
    Taylor coefficients c_0 .. c_K of a rational function at 0
    """
    coefficients: Tuple[Fraction, ...]

    @property
    def cutoff(self) -> int:
        return len(self.coefficients) - 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def as_integers(self) -> List[int]:
        if not self.is_integral():
            raise SeriesError(f"Series has non-integer coefficients: {self.coefficients}")
        return [c.numerator for c in self.coefficients]

    def to_dict(self) -> dict:
        return {"cutoff": self.cutoff, "coefficients": list(self.coefficients)}


def expand(rf: RationalFunction, cutoff: int) -> SeriesTruncation:
    """
    Power-series long division up to X^cutoff, exact.
    """
    if cutoff < 0:
        raise SeriesError(f"cutoff must be >= 0, got {cutoff}")

    num = rf.numerator_coefficients()
    den = rf.denominator_coefficients()
    if den[0] == 0:
        raise SeriesError(f"No power series at 0 for {rf}: denominator vanishes at 0")

    d0 = Fraction(den[0])
    result = []
    for k in range(cutoff + 1):
        acc = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * result[k - j]
        result.append(acc / d0)

    return SeriesTruncation(coefficients=tuple(result))


def evaluate(rf: RationalFunction, x: Rational) -> Fraction:
    x = Fraction(x)
    den = _horner(rf.denominator_coefficients(), x)
    if den == 0:
        raise PoleError(f"{rf} has a pole at X = {x}")
    return _horner(rf.numerator_coefficients(), x) / den
