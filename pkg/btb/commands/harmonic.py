from fractions import Fraction

from btb.building import PrimeContext, ball, standard_chamber
from btb.harmonic import (
    iwahori_vector, defect_scan, decay_profile, finite_support_rigidity,
)
from .ball import nearest_chamber_holds
from .base import CommandBase, CommandResult
from .params import ParameterInt, ParameterPrime, ParameterSelect

# exact rank computations run on balls of at most this radius
RIGIDITY_RADIUS = 3


class HarmonicCommand(CommandBase):
    name = "harmonic"
    help = "Check harmonicity, decay and rigidity of the Iwahori vector on a ball"

    @classmethod
    def parameters(cls):
        return [
            ParameterSelect("n", default_value=2, options=[2, 3], help="Dimension of GL(n)"),
            ParameterPrime("p", default_value=2, min_value=2, help="The prime p, also the parameter q"),
            ParameterInt("R", default_value=8, min_value=1, help="Radius of the ball"),
        ]

    def run(self) -> CommandResult:
        n, p, radius = self.values["n"], self.values["p"], self.values["R"]
        ctx = PrimeContext.for_radius(p=p, n=n, radius=radius)
        base = standard_chamber(ctx)
        graph = ball(base, radius, ctx)
        f = iwahori_vector(base, p)

        nonzero, num_faces = defect_scan(f, graph)
        profile = decay_profile(f, graph)

        rigidity_radius = min(radius, RIGIDITY_RADIUS)
        if rigidity_radius == radius:
            rigidity_ball = graph
        else:
            rigidity_ball = ball(base, rigidity_radius, PrimeContext.for_radius(p=p, n=n, radius=rigidity_radius))

        return CommandResult(
            rows=[
                {"k": k, "max |f|": m, "q^-k": Fraction(1, p ** k), "equal": m == Fraction(1, p ** k)}
                for k, m in profile
            ],
            checks=[
                ("zero defect at every interior face", nonzero == 0),
                ("one nearest chamber per interior face, the others one further", nearest_chamber_holds(graph)),
                ("|f| = q^-d on every chamber", all(
                    abs(f.value(c, graph)) == Fraction(1, p ** graph.dist(c)) for c in graph.chambers
                )),
                (f"no finitely supported harmonic cochain (R={rigidity_radius})", finite_support_rigidity(rigidity_ball)),
            ],
            summary=[f"defects: {nonzero} nonzero / {num_faces} faces"],
            data={
                "context": ctx.to_dict(),
                "radius": radius,
                "faces": num_faces,
                "nonzero_defects": nonzero,
                "decay_profile": [{"k": k, "max": m} for k, m in profile],
            },
        )

