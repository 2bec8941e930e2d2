"""
Iwahori-Hecke algebra of a Coxeter system with parameter q.

Basis elements e_w multiply by the one-letter rule

    e_s e_w = e_sw                       if l(sw) > l(w)
    e_s e_w = (q - 1) e_w + q e_sw       otherwise

extended over a reduced word of the left factor.
"""
from fractions import Fraction
from typing import Dict, List, Tuple, Union, Iterable

from btb.coxeter import CoxeterGroup, GroupElement

Rational = Union[int, Fraction]


class HeckeMismatchError(ValueError):
    pass


class HeckeElement:

    def __init__(self, group: CoxeterGroup, q: Rational, coefficients: Dict[GroupElement, Rational] = None):
        self.group = group
        self.q = Fraction(q)
        self.coefficients: Dict[GroupElement, Fraction] = {
            w: Fraction(c)
            for w, c in (coefficients or {}).items()
            if c != 0
        }

    def __repr__(self):
        terms = " + ".join(
            f"{c}*e{list(self.group.reduced_word(w))}"
            for w, c in self._sorted_items()
        )
        return f"HeckeElement({terms or '0'})"

    def _sorted_items(self) -> List[Tuple[GroupElement, Fraction]]:
        return sorted(
            self.coefficients.items(),
            key=lambda item: (self.group.length(item[0]), self.group.reduced_word(item[0])),
        )

    def _check(self, other: "HeckeElement"):
        if other.group.diagram != self.group.diagram:
            raise HeckeMismatchError("Hecke elements of different Coxeter systems")
        if other.q != self.q:
            raise HeckeMismatchError(f"Hecke parameters differ: {self.q} != {other.q}")

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        return self.coefficients == other.coefficients

    def __add__(self, other: Union["HeckeElement", Rational]) -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            other = basis_element(self.group, self.group.identity, self.q) * other
        self._check(other)
        coefficients = dict(self.coefficients)
        for w, c in other.coefficients.items():
            coefficients[w] = coefficients.get(w, 0) + c
        return HeckeElement(self.group, self.q, coefficients)

    __radd__ = __add__

    def __neg__(self) -> "HeckeElement":
        return self * -1

    def __sub__(self, other: Union["HeckeElement", Rational]) -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other: Union["HeckeElement", Rational]) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return HeckeElement(self.group, self.q, {w: c * other for w, c in self.coefficients.items()})

    def __rmul__(self, other: Rational) -> "HeckeElement":
        return self * other

    def is_zero(self) -> bool:
        return not self.coefficients

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "terms": [
                {"word": list(self.group.reduced_word(w)), "coefficient": c}
                for w, c in self._sorted_items()
            ],
        }


def basis_element(group: CoxeterGroup, w: GroupElement, q: Rational) -> HeckeElement:
    return HeckeElement(group, q, {w: 1})


def generator_element(group: CoxeterGroup, s: int, q: Rational) -> HeckeElement:
    return basis_element(group, group.generator(s), q)


def _left_multiply_generator(
        group: CoxeterGroup,
        s: int,
        q: Fraction,
        coefficients: Dict[GroupElement, Fraction],
) -> Dict[GroupElement, Fraction]:
    generator = group.generator(s)
    result: Dict[GroupElement, Fraction] = {}
    for w, c in coefficients.items():
        sw = generator * w
        if group.length(sw) > group.length(w):
            result[sw] = result.get(sw, 0) + c
        else:
            result[w] = result.get(w, 0) + (q - 1) * c
            result[sw] = result.get(sw, 0) + q * c
    return result


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._check(b)
    group, q = a.group, a.q
    result: Dict[GroupElement, Fraction] = {}
    for v, c in a.coefficients.items():
        product = dict(b.coefficients)
        for s in reversed(group.reduced_word(v)):
            product = _left_multiply_generator(group, s, q, product)
        for w, d in product.items():
            result[w] = result.get(w, 0) + c * d
    return HeckeElement(group, q, result)


def word_element(group: CoxeterGroup, word: Iterable[int], q: Rational) -> HeckeElement:
    """
    e_s1 e_s2 ... e_sk for an arbitrary (not necessarily reduced) word
    """
    element = basis_element(group, group.identity, q)
    for s in word:
        element = element * generator_element(group, s, q)
    return element


def special_character(x: HeckeElement) -> Fraction:
    """
    χ(e_w) = (-1)^l(w), extended linearly
    """
    return sum(
        (c * (-1) ** x.group.length(w) for w, c in x.coefficients.items()),
        Fraction(0),
    )


def quadratic_relation_holds(group: CoxeterGroup, s: int, q: Rational) -> bool:
    """
    (e_s + 1)(e_s - q) == 0
    """
    e_s = generator_element(group, s, q)
    return ((e_s + 1) * (e_s - q)).is_zero()


def braid_relation_holds(group: CoxeterGroup, s: int, t: int, q: Rational) -> bool:
    """
    e_s e_t e_s ... == e_t e_s e_t ... with m_st factors on each side
    """
    m = group.diagram.order(s, t)
    if m == float("inf"):
        return True
    left = word_element(group, [(s, t)[i % 2] for i in range(m)], q)
    right = word_element(group, [(t, s)[i % 2] for i in range(m)], q)
    return left == right
