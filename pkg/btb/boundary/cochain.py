"""
Simplicial cochains with finite support on the tree of GL(2, Q_p).
"""
from fractions import Fraction
from typing import Dict, Tuple, Sequence, Union, Optional, List

from btb.building import LatticeClass, PrimeContext, adjacent_vertices, relative_exponents

Rational = Union[int, Fraction]
Edge = Tuple[LatticeClass, LatticeClass]


class NotAdjacentError(ValueError):
    pass


class ZeroCochain:
    """
    Finitely supported function on vertices
    """
    def __init__(self, values: Optional[Dict[LatticeClass, Rational]] = None):
        self.values: Dict[LatticeClass, Fraction] = {
            v: Fraction(x) for v, x in (values or {}).items() if x != 0
        }

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.values)} vertices)"

    def __eq__(self, other):
        if not isinstance(other, ZeroCochain):
            return NotImplemented
        return self.values == other.values

    def __call__(self, vertex: LatticeClass) -> Fraction:
        return self.values.get(vertex, Fraction(0))

    def __add__(self, other: "ZeroCochain") -> "ZeroCochain":
        values = dict(self.values)
        for v, x in other.values.items():
            values[v] = values.get(v, 0) + x
        return ZeroCochain(values)

    def __mul__(self, factor: Rational) -> "ZeroCochain":
        return ZeroCochain({v: x * factor for v, x in self.values.items()})

    __rmul__ = __mul__

    @property
    def support(self) -> List[LatticeClass]:
        return sorted(self.values)

    def to_dict(self) -> dict:
        return {"values": [{"vertex": v.hnf, "value": self.values[v]} for v in self.support]}


class OneCochain:
    """
    Finitely supported antisymmetric function on oriented edges,
    both orientations are stored.
    """
    def __init__(self, values: Optional[Dict[Edge, Rational]] = None):
        self.values: Dict[Edge, Fraction] = {}
        for (s, t), x in (values or {}).items():
            x = Fraction(x)
            if (t, s) in self.values and self.values[(t, s)] != -x:
                raise ValueError(f"Values on edge ({s}, {t}) are not antisymmetric")
            if x:
                self.values[(s, t)] = x
                self.values[(t, s)] = -x

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.values) // 2} edges)"

    def __eq__(self, other):
        if not isinstance(other, OneCochain):
            return NotImplemented
        return self.values == other.values

    def __call__(self, s: LatticeClass, t: LatticeClass) -> Fraction:
        return self.values.get((s, t), Fraction(0))

    def __add__(self, other: "OneCochain") -> "OneCochain":
        values = {}
        for edge in set(self.values) | set(other.values):
            if edge[0] < edge[1]:
                values[edge] = self(*edge) + other(*edge)
        return OneCochain(values)

    def __mul__(self, factor: Rational) -> "OneCochain":
        return OneCochain({e: x * factor for e, x in self.values.items() if e[0] < e[1]})

    __rmul__ = __mul__

    def __neg__(self) -> "OneCochain":
        return self * -1

    def edges(self) -> List[Edge]:
        """
        Support, one orientation per edge
        """
        return sorted(e for e in self.values if e[0] < e[1])

    def vertices(self) -> List[LatticeClass]:
        return sorted({v for e in self.values for v in e})

    def to_dict(self) -> dict:
        return {
            "values": [
                {"edge": [s.hnf, t.hnf], "value": self.values[(s, t)]}
                for s, t in self.edges()
            ]
        }


def coboundary(f: ZeroCochain, ctx: PrimeContext) -> OneCochain:
    """
    df(s, t) = f(s) - f(t) on every edge meeting the support of f
    """
    values = {}
    for s in f.support:
        for t in adjacent_vertices(s, ctx):
            values[(s, t)] = f(s) - f(t)
    return OneCochain(values)


def are_adjacent(s: LatticeClass, t: LatticeClass) -> bool:
    exponents = relative_exponents(s, t)
    return max(exponents) - min(exponents) == 1


def integrate(omega: OneCochain, path: Sequence[LatticeClass]) -> Fraction:
    """
    Sum of omega(s_i, s_i+1) along a path of adjacent vertices
    """
    total = Fraction(0)
    for s, t in zip(path, path[1:]):
        if (s, t) not in omega.values and not are_adjacent(s, t):
            raise NotAdjacentError(f"{s} and {t} are not adjacent")
        total += omega(s, t)
    return total
