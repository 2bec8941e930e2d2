from fractions import Fraction
from typing import Dict, Iterable, List, Union, Optional

from btb.building import BallGraph, FlagChamber, Face

Rational = Union[int, Fraction]


class Cochain:
    """
    Base class of functions from chambers to exact rationals.
    """

    def value(self, chamber: FlagChamber, ball: Optional[BallGraph] = None) -> Fraction:
        raise NotImplementedError

    def on_ball(self, ball: BallGraph) -> "MapCochain":
        """
        Restriction to the chambers of `ball` as an explicit map
        """
        return MapCochain({c: self.value(c, ball) for c in ball.chambers})


class MapCochain(Cochain):
    """
    Finitely supported cochain, zero values are never stored.
    """
    def __init__(self, values: Optional[Dict[FlagChamber, Rational]] = None):
        self.values: Dict[FlagChamber, Fraction] = {
            c: Fraction(v)
            for c, v in (values or {}).items()
            if v != 0
        }

    @classmethod
    def indicator(cls, chambers: Union[FlagChamber, Iterable[FlagChamber]]) -> "MapCochain":
        if isinstance(chambers, FlagChamber):
            chambers = [chambers]
        return cls({c: 1 for c in chambers})

    @classmethod
    def face_indicator(cls, face: Face, ball: BallGraph) -> "MapCochain":
        """
        g_D, the all-ones cochain on the chambers containing `face`
        """
        return cls.indicator(ball.chambers_of(face))

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.values)} chambers)"

    def __eq__(self, other):
        if not isinstance(other, MapCochain):
            return NotImplemented
        return self.values == other.values

    def __add__(self, other: "MapCochain") -> "MapCochain":
        values = dict(self.values)
        for c, v in other.values.items():
            values[c] = values.get(c, 0) + v
        return MapCochain(values)

    def __sub__(self, other: "MapCochain") -> "MapCochain":
        return self + other * -1

    def __mul__(self, factor: Rational) -> "MapCochain":
        return MapCochain({c: v * factor for c, v in self.values.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.values)

    @property
    def support(self) -> List[FlagChamber]:
        return sorted(self.values)

    def value(self, chamber: FlagChamber, ball: Optional[BallGraph] = None) -> Fraction:
        return self.values.get(chamber, Fraction(0))

    def to_dict(self) -> dict:
        return {
            "values": [
                {"chamber": [v.hnf for v in c.vertices], "value": self.values[c]}
                for c in self.support
            ]
        }


class IwahoriVector(Cochain):
    """
    The rule C -> (-1/q)^d(base, C), evaluated with distances of a ball around `base`.
    """
    def __init__(self, base: FlagChamber, q: Rational):
        self.base = base
        self.q = Fraction(q)

    def __repr__(self):
        return f"{self.__class__.__name__}(q={self.q})"

    def value(self, chamber: FlagChamber, ball: Optional[BallGraph] = None) -> Fraction:
        if chamber == self.base:
            return Fraction(1)
        if ball is None or ball.base != self.base:
            raise ValueError("Evaluating the Iwahori vector needs a ball around its base chamber")
        if chamber not in ball:
            raise KeyError(f"{chamber} is outside of {ball}")
        return (-1 / self.q) ** ball.dist(chamber)

    def to_dict(self) -> dict:
        return {"rule": "iwahori", "base": [v.hnf for v in self.base.vertices], "q": self.q}


def iwahori_vector(base: FlagChamber, q: Rational) -> IwahoriVector:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    return IwahoriVector(base, q)


def pairing(f: Cochain, g: MapCochain, ball: Optional[BallGraph] = None) -> Fraction:
    """
    sum_C f(C) g(C) over the finite support of g
    """
    return sum((f.value(c, ball) * v for c, v in g.values.items()), Fraction(0))
