from btb.building import PrimeContext, ball, standard_chamber, weyl_to_chamber
from btb.coxeter import AffineTypeLabel, affine_diagram, coxeter_group
from btb.harmonic import min_distance_chamber, NearestChamberError
from btb.period import growth_counts
from .base import CommandBase, CommandResult
from .params import ParameterInt, ParameterPrime, ParameterSelect

# word lengths checked against gallery distances, per n
DISTANCE_CHECK_LENGTH = {2: 5, 3: 3}


def nearest_chamber_holds(graph) -> bool:
    try:
        for face in graph.interior_faces():
            min_distance_chamber(face, graph)
    except NearestChamberError:
        return False
    return True


class BallCommand(CommandBase):
    name = "ball"
    help = "Enumerate a ball of chambers around the standard chamber and check its combinatorics"

    @classmethod
    def parameters(cls):
        return [
            ParameterSelect("n", default_value=2, options=[2, 3], help="Dimension of GL(n)"),
            ParameterPrime("p", default_value=2, min_value=2, help="The prime p"),
            ParameterInt("R", default_value=3, min_value=0, help="Radius of the ball"),
        ]

    def run(self) -> CommandResult:
        n, p, radius = self.values["n"], self.values["p"], self.values["R"]
        ctx = PrimeContext.for_radius(p=p, n=n, radius=radius)
        graph = ball(standard_chamber(ctx), radius, ctx)

        counts = graph.shell_counts()
        growth = growth_counts(AffineTypeLabel("A", n - 1), radius)
        expected = [g * p ** k for k, g in enumerate(growth)]

        group = coxeter_group(affine_diagram(AffineTypeLabel("A", n - 1)))
        max_length = min(radius, DISTANCE_CHECK_LENGTH[n])
        distances_match = True
        for k in range(max_length + 1):
            for w in group.elements_of_length(k):
                chamber = weyl_to_chamber(group.reduced_word(w), ctx)
                if chamber not in graph or graph.dist(chamber) != k:
                    distances_match = False

        return CommandResult(
            rows=[
                {"k": k, "chambers": c, "N(k)*p^k": e, "equal": c == e}
                for k, (c, e) in enumerate(zip(counts, expected))
            ],
            checks=[
                ("shell counts equal N(k) p^k", counts == expected),
                (f"every interior face lies in {p + 1} chambers", all(
                    len(graph.chambers_of(face)) == p + 1 for face in graph.interior_faces()
                )),
                ("vertex labels of every chamber are 0..n-1", all(
                    sorted(c.labels) == list(range(n)) for c in graph.chambers
                )),
                ("adjacent chambers differ in distance by at most 1", all(
                    abs(graph.dist(c) - graph.dist(other)) <= 1
                    for c in graph.chambers for _, other in graph.adjacency[c]
                )),
                ("one nearest chamber per interior face, the others one further", nearest_chamber_holds(graph)),
                (f"d(C_0, w C_0) = l(w) for l(w) <= {max_length}", distances_match),
            ],
            summary=[f"{len(graph)} chambers, {len(graph.interior_faces())} interior faces"],
            data={
                "context": ctx.to_dict(),
                "radius": radius,
                "shell_counts": counts,
                "expected_counts": expected,
                "ball": graph.to_dict() if len(graph) <= 1000 else None,
            },
        )
