"""
The linear form Λ(f) = sum over the chambers of the building of f(C),
evaluated on the Iwahori vector of the quadratic unramified extension.

Grouping chambers by distance gives N(k) q_F^k chambers at distance k,
each weighted (-1/q_E)^k = (-1/q_F)^(2k), so the series becomes
sum N(k) (-1/q_F)^k = P(-1/q_F).
"""
import dataclasses
from fractions import Fraction
from typing import List, Union, Optional, Tuple

from btb.coxeter import AffineTypeLabel
from btb.poincare import exponents_for, bott_rational, expand, evaluate, absolute_tail
from btb.building import PrimeContext, BallGraph, ball, standard_chamber

Label = Union[AffineTypeLabel, str]


def _label(label: Label) -> AffineTypeLabel:
    return AffineTypeLabel.parse(label) if isinstance(label, str) else label


def _check_q(q_f: int):
    if int(q_f) != q_f or q_f < 2:
        raise ValueError(f"q_F must be an integer >= 2, got {q_f}")


def growth_counts(label: Label, cutoff: int) -> List[int]:
    """
    N(0) .. N(cutoff) from the rational form of the Poincaré series
    """
    return expand(bott_rational(exponents_for(_label(label))), cutoff).as_integers()


def lambda_partial(label: Label, q_f: int, cutoff: int) -> List[Fraction]:
    """
    Partial sums S_0 .. S_cutoff of sum N(k) (-1/q_F)^k
    """
    _check_q(q_f)
    x = Fraction(-1, q_f)
    sums, total = [], Fraction(0)
    for k, count in enumerate(growth_counts(label, cutoff)):
        total += count * x ** k
        sums.append(total)
    return sums


def lambda_closed(label: Label, q_f: int) -> Fraction:
    _check_q(q_f)
    return evaluate(bott_rational(exponents_for(_label(label))), Fraction(-1, q_f))


def lambda_product_form(label: Label, q_f: int) -> Fraction:
    """
    P(-1/q_F) from the product over the exponents, without polynomial arithmetic
    """
    _check_q(q_f)
    x = Fraction(-1, q_f)
    value = Fraction(1)
    for m in exponents_for(_label(label)).exponents:
        value *= (1 - x ** (m + 1)) / ((1 - x) * (1 - x ** m))
    return value


def absolute_majorant(label: Label, q_f: int) -> Fraction:
    """
    P(1/q_F), bounding sum |f(C)| for the Iwahori vector
    """
    _check_q(q_f)
    return evaluate(bott_rational(exponents_for(_label(label))), Fraction(1, q_f))


@dataclasses.dataclass(frozen=True)
class ShellContribution:
    distance: int
    chambers: int
    expected_chambers: int
    weight: Fraction

    @property
    def contribution(self) -> Fraction:
        return self.chambers * self.weight

    def to_dict(self) -> dict:
        return {
            "distance": self.distance,
            "chambers": self.chambers,
            "expected_chambers": self.expected_chambers,
            "weight": self.weight,
            "contribution": self.contribution,
        }


def shell_contributions(ctx: PrimeContext, radius: int, graph: Optional[BallGraph] = None) -> List[ShellContribution]:
    """
    Per distance: enumerated chambers, N(k) p^k, (-1/p^2)^k
    """
    graph = graph or ball(standard_chamber(ctx), radius, ctx)
    counts = growth_counts(AffineTypeLabel("A", ctx.n - 1), radius)
    weight = Fraction(-1, ctx.p ** 2)
    return [
        ShellContribution(
            distance=k,
            chambers=chambers,
            expected_chambers=counts[k] * ctx.p ** k,
            weight=weight ** k,
        )
        for k, chambers in enumerate(graph.shell_counts())
    ]


def geometric_lambda(ctx: PrimeContext, radius: int, graph: Optional[BallGraph] = None) -> Fraction:
    """
    sum over the chambers of the ball of (-1/q_E)^d(C_0, C), q_E = p^2
    """
    return sum(
        (shell.contribution for shell in shell_contributions(ctx, radius, graph)),
        Fraction(0),
    )


@dataclasses.dataclass
class PeriodReport:
    label: AffineTypeLabel
    q_f: int
    cutoff: int
    partial_sums: List[Fraction]
    closed_form: Fraction
    product_form: Fraction
    tail_bound: Fraction
    majorant: Fraction
    geometric: Optional[List[ShellContribution]] = None

    @property
    def q_e(self) -> int:
        return self.q_f ** 2

    @property
    def error(self) -> Fraction:
        return abs(self.partial_sums[-1] - self.closed_form)

    def checks(self) -> List[Tuple[str, bool]]:
        checks = [
            ("closed form equals product form", self.closed_form == self.product_form),
            ("closed form is nonzero", self.closed_form != 0),
            ("|S_K - closed form| <= tail bound", self.error <= self.tail_bound),
            ("|closed form| <= majorant", abs(self.closed_form) <= self.majorant),
            ("shell signs alternate", all(
                s != 0 and (s > 0) == (k % 2 == 0)
                for k, s in enumerate(
                    b - a for a, b in zip([Fraction(0)] + self.partial_sums, self.partial_sums)
                )
            )),
        ]
        if self.geometric is not None:
            total = sum((s.contribution for s in self.geometric), Fraction(0))
            checks += [
                ("shell counts equal N(k) q^k", all(s.chambers == s.expected_chambers for s in self.geometric)),
                ("geometric sum equals partial sum", total == self.partial_sums[len(self.geometric) - 1]),
            ]
        return checks

    def to_dict(self) -> dict:
        return {
            "type": str(self.label),
            "q_F": self.q_f,
            "q_E": self.q_e,
            "cutoff": self.cutoff,
            "partial_sums": self.partial_sums,
            "closed_form": self.closed_form,
            "product_form": self.product_form,
            "tail_bound": self.tail_bound,
            "majorant": self.majorant,
            "geometric": [s.to_dict() for s in self.geometric] if self.geometric is not None else None,
            "checks": [{"name": name, "passed": passed} for name, passed in self.checks()],
        }


def period_report(
        label: Label,
        q_f: int,
        cutoff: int,
        geometric_radius: Optional[int] = None,
) -> PeriodReport:
    """
    All period quantities for `label` and q_F.

    With `geometric_radius`, type A~(n-1) with n in (2, 3) and q_F prime,
    the ball of that radius is enumerated and its shells added.
    """
    label = _label(label)
    _check_q(q_f)
    exponents = exponents_for(label)

    geometric = None
    if geometric_radius is not None:
        if label.family != "A":
            raise ValueError(f"Geometric check needs type A, got {label}")
        if geometric_radius > cutoff:
            raise ValueError(f"Geometric radius {geometric_radius} exceeds the cutoff {cutoff}")
        ctx = PrimeContext.for_radius(p=q_f, n=label.rank + 1, radius=geometric_radius)
        geometric = shell_contributions(ctx, geometric_radius)

    return PeriodReport(
        label=label,
        q_f=q_f,
        cutoff=cutoff,
        partial_sums=lambda_partial(label, q_f, cutoff),
        closed_form=lambda_closed(label, q_f),
        product_form=lambda_product_form(label, q_f),
        tail_bound=absolute_tail(exponents, q_f, cutoff),
        majorant=absolute_majorant(label, q_f),
        geometric=geometric,
    )
