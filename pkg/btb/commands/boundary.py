import random
from fractions import Fraction

from btb import config
from btb.boundary import (
    ZeroCochain, TreeSphere, coboundary, boundary_value, lift, primitive, end_chart,
    sphere_vertex_count, end_count, BoundaryFunction,
)
from btb.building import PrimeContext, standard_lattice
from .base import CommandBase, CommandResult
from .params import ParameterInt, ParameterPrime


def random_value(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


class BoundaryCommand(CommandBase):
    name = "boundary"
    help = "Check the boundary map from 1-cochains on the tree to functions on P^1(Q_p)"

    @classmethod
    def parameters(cls):
        return [
            ParameterPrime("p", default_value=2, min_value=2, help="The prime p"),
            ParameterInt("R", default_value=2, min_value=1, help="Depth r of the sphere S(o, r)"),
            ParameterInt("samples", default_value=20, min_value=1, help="Random instances per check"),
        ]

    def run(self) -> CommandResult:
        p, depth, samples = self.values["p"], self.values["R"], self.values["samples"]
        ctx = PrimeContext.for_radius(p=p, n=2, radius=depth + 1)
        origin = standard_lattice(0, ctx)
        sphere = TreeSphere(origin, depth, ctx)
        inner = [v for v in sphere.vertices if sphere.depth[v] < depth]
        rng = random.Random(config.RANDOM_SEED)

        kernel = True
        for _ in range(samples):
            f = ZeroCochain({v: random_value(rng) for v in rng.sample(inner, rng.randint(1, len(inner)))})
            if not boundary_value(coboundary(f, ctx), origin, depth, ctx).is_constant():
                kernel = False

        exact = True
        for _ in range(samples):
            f = ZeroCochain({v: random_value(rng) for v in rng.sample(inner, rng.randint(1, len(inner)))})
            omega = coboundary(f, ctx)
            if coboundary(primitive(omega, origin, depth, ctx), ctx) != omega:
                exact = False

        surjective = True
        for _ in range(samples):
            g = BoundaryFunction(
                depth=depth,
                partition=tuple((end, random_value(rng)) for end in sphere.ends()),
            )
            if not boundary_value(lift(g, origin, ctx), origin, depth, ctx).equals_up_to_constant(g):
                surjective = False

        charts = [end_chart(end, ctx) for end in sphere.ends()]

        rows = [
            {"check": "vertices of S(o, r)", "value": len(sphere), "expected": sphere_vertex_count(p, depth)},
            {"check": "end directions", "value": len(sphere.ends()), "expected": end_count(p, depth)},
            {"check": "distinct chart balls", "value": len(set(charts)), "expected": end_count(p, depth)},
        ]
        checks = [(row["check"], row["value"] == row["expected"]) for row in rows] + [
            ("boundary value of df is constant", kernel),
            ("omega with constant boundary value is df", exact),
            ("boundary value of lift(g) is g up to a constant", surjective),
        ]
        return CommandResult(
            rows=rows,
            checks=checks,
            data={
                "p": p,
                "depth": depth,
                "rows": rows,
                "charts": [
                    {"edge": [t.hnf, s.hnf], "chart": list(c)}
                    for (t, s), c in zip(sphere.ends(), charts)
                ],
            },
        )
