import itertools
import random
from fractions import Fraction

from btb import config
from btb.building import PrimeContext, ball, standard_chamber
from btb.coxeter import affine_diagram, coxeter_group
from btb.harmonic import MapCochain
from btb.hecke import (
    basis_element, multiply, special_character,
    quadratic_relation_holds, braid_relation_holds,
    convolve_chamber_function, convolve_by_relative_position, steinberg_relation_holds,
)
from btb.util.padic import is_prime
from .base import CommandBase, CommandResult
from .params import ParameterTypeLabel, ParameterFraction, ParameterInt

# ball radius of the geometric check, per n
GEOMETRIC_RADIUS = {2: 3, 3: 2}


class HeckeCommand(CommandBase):
    name = "hecke"
    help = "Check the Iwahori-Hecke relations, the special character and the convolution action"

    @classmethod
    def parameters(cls):
        return [
            ParameterTypeLabel("type", default_value="A2~", help="Affine type label"),
            ParameterFraction("q", default_value=2, help="Hecke parameter, an exact rational like 7/2"),
            ParameterInt("K", default_value=2, min_value=0, help="Length bound of the character check"),
            ParameterInt("samples", default_value=5, min_value=0, help="Random cochains of the geometric check"),
        ]

    def run(self) -> CommandResult:
        label, q, cutoff = self.values["type"], self.values["q"], self.values["K"]
        group = coxeter_group(affine_diagram(label))
        generators = group.diagram.generators

        rows = []
        for s in generators:
            rows.append({"check": f"(e_{s} + 1)(e_{s} - q) = 0", "passed": quadratic_relation_holds(group, s, q)})
        for s, t in itertools.combinations(generators, 2):
            m = group.diagram.order(s, t)
            rows.append({"check": f"braid relation s{s} s{t}, m = {m}", "passed": braid_relation_holds(group, s, t, q)})

        elements = [w for k in range(cutoff + 1) for w in group.elements_of_length(k)]
        multiplicative = all(
            special_character(multiply(basis_element(group, v, q), basis_element(group, w, q)))
            == (-1) ** (group.length(v) + group.length(w))
            for v in elements for w in elements
        )
        rows.append({"check": f"χ(e_v e_w) = χ(e_v) χ(e_w) for l(v), l(w) <= {cutoff}", "passed": multiplicative})

        if label.family == "A" and label.rank in (1, 2) and q.denominator == 1 and is_prime(q.numerator):
            rows.extend(self._geometric_rows(label.rank + 1, q.numerator))

        return CommandResult(
            rows=rows,
            checks=[(row["check"], row["passed"]) for row in rows],
            data={"type": str(label), "q": q, "rows": rows},
        )

    def _geometric_rows(self, n: int, p: int):
        radius = GEOMETRIC_RADIUS[n]
        ctx = PrimeContext.for_radius(p=p, n=n, radius=radius)
        graph = ball(standard_chamber(ctx), radius, ctx)
        inner = [c for c in graph.chambers if graph.dist(c) < radius]
        rng = random.Random(config.RANDOM_SEED)

        agree = True
        for _ in range(self.values["samples"]):
            support = rng.sample(inner, min(len(inner), rng.randint(1, 4)))
            f = MapCochain({c: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for c in support})
            for s in range(n):
                if convolve_chamber_function(f, s, graph) != convolve_by_relative_position(f, s, graph):
                    agree = False

        steinberg = all(
            steinberg_relation_holds(c, s, graph)
            for c in inner for s in range(n)
        )
        return [
            {"check": f"face and vertex convolutions agree on the building, p = {p}", "passed": agree},
            {"check": f"1_C * e_s + 1_C = g_(C_s) on the building, p = {p}", "passed": steinberg},
        ]
