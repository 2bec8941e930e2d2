"""
Boundary values of 1-cochains on the tree, as functions on the ends.

At depth r the ends of the tree are partitioned by the end directions
(t_i, s_i) of S(o, r). A 1-cochain supported in S(o, r) has an ultimate
value on each part, the integral from o to s_i.
"""
import dataclasses
from fractions import Fraction
from typing import Tuple, List, Optional

from btb.building import LatticeClass, PrimeContext
from .cochain import OneCochain, ZeroCochain, Edge, coboundary, integrate, are_adjacent
from .tree import TreeSphere


class SupportError(ValueError):
    pass


class MalformedPartitionError(ValueError):
    pass


class NotExactError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BoundaryFunction:
    depth: int
    partition: Tuple[Tuple[Edge, Fraction], ...]
    chart: Optional[Tuple[Tuple[Tuple[int, int], Fraction], ...]] = None

    def value(self, edge: Edge) -> Fraction:
        for e, v in self.partition:
            if e == edge:
                return v
        raise KeyError(edge)

    def values(self) -> List[Fraction]:
        return [v for _, v in self.partition]

    def is_constant(self) -> bool:
        return len(set(self.values())) <= 1

    def equals_up_to_constant(self, other: "BoundaryFunction") -> bool:
        if dict(self.partition).keys() != dict(other.partition).keys():
            return False
        other_values = dict(other.partition)
        return len({v - other_values[e] for e, v in self.partition}) <= 1

    def to_dict(self) -> dict:
        charts = [point for point, _ in (self.chart or ())]
        return {
            "depth": self.depth,
            "parts": [
                {
                    "edge": [edge[0].hnf, edge[1].hnf],
                    "value": value,
                    **({"chart": list(charts[i])} if self.chart else {}),
                }
                for i, (edge, value) in enumerate(self.partition)
            ],
        }


def boundary_value(omega: OneCochain, origin: LatticeClass, depth: int, ctx: PrimeContext) -> BoundaryFunction:
    """
    For each end direction (t_i, s_i) of S(o, depth), the integral of omega from o to s_i
    """
    sphere = TreeSphere(origin, depth, ctx)
    for s, t in omega.edges():
        if s not in sphere or t not in sphere:
            raise SupportError(f"Support of omega leaves S(o, {depth}) at edge ({s}, {t})")

    partition = tuple(
        (end, integrate(omega, sphere.path_from_origin(end[1])))
        for end in sphere.ends()
    )
    chart = None
    if _is_standard(origin):
        chart = tuple((end_chart(end, ctx), value) for end, value in partition)
    return BoundaryFunction(depth=depth, partition=partition, chart=chart)


def lift(g: BoundaryFunction, origin: LatticeClass, ctx: PrimeContext) -> OneCochain:
    """
    A 1-cochain supported in S(o, r) whose boundary value is g.

    With f_r = g on the sphere vertices s_i and 0 inside, omega = -d f_r
    restricted to the edges of S(o, r).
    """
    if g.depth < 1:
        raise MalformedPartitionError(f"Boundary functions need depth >= 1, got {g.depth}")
    sphere = TreeSphere(origin, g.depth, ctx)
    ends = sphere.ends()
    edges = [e for e, _ in g.partition]
    if sorted(edges) != sorted(ends) or len(set(edges)) != len(edges):
        raise MalformedPartitionError(
            f"Partition must list each of the {len(ends)} end directions of S(o, {g.depth}) once"
        )

    f = ZeroCochain({end[1]: value for end, value in g.partition})
    df = coboundary(f, ctx)
    return OneCochain({
        (s, t): -x for (s, t), x in df.values.items()
        if s in sphere and t in sphere
    })


def primitive(omega: OneCochain, origin: LatticeClass, depth: int, ctx: PrimeContext) -> ZeroCochain:
    """
    A finitely supported f with df = omega, for omega with constant boundary value c.

    f(s) = c - (integral of omega from o to s) on S(o, depth), 0 outside.
    """
    bv = boundary_value(omega, origin, depth, ctx)
    if not bv.is_constant():
        raise NotExactError("Boundary value is not constant")
    c = bv.values()[0] if bv.partition else Fraction(0)

    sphere = TreeSphere(origin, depth, ctx)
    f = ZeroCochain({
        s: c - integrate(omega, sphere.path_from_origin(s))
        for s in sphere.vertices
    })
    if coboundary(f, ctx) != omega:
        raise NotExactError("Primitive does not reproduce omega")
    return f


def _is_standard(vertex: LatticeClass) -> bool:
    return all(
        vertex.hnf[i][j] == (1 if i == j else 0)
        for i in range(vertex.n) for j in range(vertex.n)
    )


def end_chart(end: Edge, ctx: PrimeContext) -> Tuple[int, int]:
    """
    Projective coordinates [x : y] of the ball of P^1(Q_p) behind an end
    direction of the sphere around the standard vertex.

    The outer vertex is [Z_p v + p^r Z_p^2] for a primitive v = (x, y); the
    result is [x/y mod p^r : 1] when y is a unit, else [1 : y/x mod p^r].
    """
    if ctx.n != 2:
        raise ValueError("end_chart needs the tree, n = 2")
    t, s = end
    p = ctx.p
    r = sum(s.exponents)
    if r < 1 or sum(t.exponents) != r - 1 or not are_adjacent(t, s):
        raise ValueError(f"{end} is not an end direction of the standard vertex")

    (a, b), (_, d) = s.hnf
    modulus = p ** r
    # a primitive basis column of the outer vertex
    x, y = (1, 0) if a == 1 else (b, d)
    if y % p:
        return x * pow(y, -1, modulus) % modulus, 1
    return 1, y * pow(x, -1, modulus) % modulus
