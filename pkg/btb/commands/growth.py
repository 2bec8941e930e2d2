from btb.coxeter import affine_diagram, bfs_growth
from btb.poincare import exponents_for, bott_rational, expand
from .base import CommandBase, CommandResult
from .params import ParameterTypeLabel, ParameterInt


class GrowthCommand(CommandBase):
    name = "growth"
    help = "Compare the enumerated growth N(k) of an affine Weyl group with its Poincaré series"

    @classmethod
    def parameters(cls):
        return [
            ParameterTypeLabel("type", default_value="A2~", help="Affine type label, e.g. A2~, C2~, G2~"),
            ParameterInt("K", default_value=6, min_value=0, help="Largest length k"),
        ]

    def run(self) -> CommandResult:
        label, cutoff = self.values["type"], self.values["K"]

        enumerated = list(bfs_growth(affine_diagram(label), cutoff).counts)
        rational = bott_rational(exponents_for(label))
        closed_form = expand(rational, cutoff).as_integers()

        return CommandResult(
            rows=[
                {"source": "enumerated", "counts": enumerated},
                {"source": "closed form", "counts": closed_form},
            ],
            checks=[(f"N(0..{cutoff}) enumerated equals closed form", enumerated == closed_form)],
            summary=[f"P(X) = {rational}"],
            data={
                "type": str(label),
                "cutoff": cutoff,
                "enumerated": enumerated,
                "closed_form": closed_form,
                "poincare_series": rational,
            },
        )
