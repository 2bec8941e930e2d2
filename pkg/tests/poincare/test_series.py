from fractions import Fraction

from btb.coxeter import AffineTypeLabel, affine_diagram, bfs_growth
from btb.poincare import (
    ExponentTable, RationalFunction, SeriesError,
    exponents_for, bott_rational, expand, absolute_tail,
)
from tests.base import BtbTestCase


class TestExponents(BtbTestCase):

    def test_exponents(self):
        self.assertEqual((1, ), exponents_for("A1~").exponents)
        self.assertEqual((1, 2), exponents_for("A2~").exponents)
        self.assertEqual((1, 2, 3, 4), exponents_for("A4~").exponents)
        self.assertEqual((1, 3), exponents_for("C2~").exponents)
        self.assertEqual((1, 3, 5), exponents_for("B3~").exponents)
        self.assertEqual((1, 3, 3, 5), exponents_for("D4~").exponents)
        self.assertEqual((1, 3, 4, 5, 7), exponents_for("D5~").exponents)
        self.assertEqual((1, 5), exponents_for("G2~").exponents)
        self.assertEqual((1, 5, 7, 11), exponents_for("F4~").exponents)
        self.assertEqual((1, 4, 5, 7, 8, 11), exponents_for("E6~").exponents)

    def test_exponent_sum_is_number_of_positive_roots(self):
        positive_roots = {"A3~": 6, "B3~": 9, "C3~": 9, "D4~": 12, "E6~": 36, "E7~": 63, "E8~": 120, "F4~": 24, "G2~": 6}
        for text, count in positive_roots.items():
            self.assertEqual(count, sum(exponents_for(text).exponents), text)


class TestBottRational(BtbTestCase):

    def test_closed_forms(self):
        self.assertEqual(
            RationalFunction.from_coefficients([1, 1], [1, -1]),
            bott_rational(exponents_for("A1~")),
        )
        self.assertEqual(
            RationalFunction.from_coefficients([1, 0, 0, -1], [1, -3, 3, -1]),
            bott_rational(exponents_for("A2~")),
        )

    def test_empty_table(self):
        with self.assertRaises(SeriesError):
            bott_rational(ExponentTable(label=AffineTypeLabel("A", 1), exponents=()))

    def test_growth_oracle(self):
        for text in ("A1~", "A2~", "A3~", "C2~", "G2~"):
            label = AffineTypeLabel.parse(text)
            self.assertEqual(
                list(bfs_growth(affine_diagram(label), 10).counts),
                expand(bott_rational(exponents_for(label)), 10).as_integers(),
                text,
            )

    def test_coefficients_are_non_negative_integers(self):
        for text in ("B3~", "D4~", "F4~", "E6~"):
            counts = expand(bott_rational(exponents_for(text)), 12).as_integers()
            self.assertTrue(all(c >= 0 for c in counts), text)
            self.assertEqual(AffineTypeLabel.parse(text).rank + 1, counts[1])


class TestAbsoluteTail(BtbTestCase):

    def test_values(self):
        table = exponents_for("A1~")
        self.assertEqual(2, absolute_tail(table, 2, 0))
        self.assertEqual(Fraction(1, 4), absolute_tail(table, 2, 3))

    def test_decreasing(self):
        for text in ("A1~", "A2~", "C2~"):
            tails = [absolute_tail(exponents_for(text), 3, k) for k in range(12)]
            self.assertTrue(all(t >= 0 for t in tails))
            self.assertTrue(all(a >= b for a, b in zip(tails, tails[1:])))

    def test_q_must_be_at_least_two(self):
        with self.assertRaises(SeriesError):
            absolute_tail(exponents_for("A1~"), 1, 3)
