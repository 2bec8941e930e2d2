from btb.period import period_report, growth_counts
from btb.util.padic import is_prime
from btb.util.table import format_cell
from .base import CommandBase, CommandResult
from .params import ParameterTypeLabel, ParameterInt

# chamber budget of the automatic geometric cross-check
AUTO_GEOMETRIC_CHAMBERS = 5000


def auto_geometric_radius(label, q: int, cutoff: int):
    """
    Largest radius <= cutoff whose ball stays within the chamber budget,
    None if the building is not enumerated for this type and q
    """
    if label.family != "A" or label.rank not in (1, 2) or not is_prime(q):
        return None
    total, radius = 0, None
    for k, count in enumerate(growth_counts(label, cutoff)):
        total += count * q ** k
        if total > AUTO_GEOMETRIC_CHAMBERS:
            break
        radius = k
    return radius


class PeriodCommand(CommandBase):
    name = "period"
    help = "Partial sums, closed form and tail bound of the period on the Iwahori vector"

    @classmethod
    def parameters(cls):
        return [
            ParameterTypeLabel("type", default_value="A1~", help="Affine type label"),
            ParameterInt("q", default_value=2, min_value=2, help="Residue field cardinality q_F"),
            ParameterInt("K", default_value=10, min_value=0, help="Truncation of the partial sums"),
            ParameterInt(
                "R", default_value=None, required=False, min_value=0,
                help="""
                Radius of the geometric cross-check on the building,
                by default chosen automatically for types A1~ and A2~ with prime q
                """,
            ),
        ]

    def run(self) -> CommandResult:
        label, q, cutoff, radius = (self.values[k] for k in ("type", "q", "K", "R"))
        if radius is None:
            radius = auto_geometric_radius(label, q, cutoff)

        report = period_report(label, q, cutoff, geometric_radius=radius)
        counts = growth_counts(label, cutoff)

        rows = []
        for k, (count, partial) in enumerate(zip(counts, report.partial_sums)):
            row = {"k": k, "N(k)": count, "partial_sum": partial}
            if report.geometric is not None:
                row["chambers"] = report.geometric[k].chambers if k < len(report.geometric) else None
            rows.append(row)

        return CommandResult(
            rows=rows,
            checks=report.checks(),
            summary=[
                f"q_E: {report.q_e}",
                f"closed form: {format_cell(report.closed_form)}",
                f"tail bound: {format_cell(report.tail_bound)}",
                f"majorant: {format_cell(report.majorant)}",
            ],
            data=report.to_dict(),
        )
