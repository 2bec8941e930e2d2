from fractions import Fraction

from hypothesis import given, settings, strategies as st

from btb.coxeter import AffineTypeLabel, affine_diagram, coxeter_group
from btb.hecke import (
    HeckeMismatchError,
    basis_element, generator_element, word_element, special_character,
    quadratic_relation_holds, braid_relation_holds,
)
from tests.base import BtbTestCase


def group_of(text: str):
    return coxeter_group(affine_diagram(AffineTypeLabel.parse(text)))


class TestRelations(BtbTestCase):

    def test_quadratic_relation(self):
        for text in ("A1~", "A2~", "A3~", "C2~"):
            group = group_of(text)
            for q in (2, 3, 4, Fraction(7, 2)):
                for s in group.diagram.generators:
                    with self.subTest(type=text, q=q, s=s):
                        self.assertTrue(quadratic_relation_holds(group, s, q))

    def test_quadratic_expansion(self):
        group = group_of("A1~")
        q = 3
        e_0 = generator_element(group, 0, q)
        self.assertEqual(e_0 * (q - 1) + q, e_0 * e_0)

    def test_braid_relation(self):
        for text in ("A1~", "A2~", "A3~", "C2~", "G2~"):
            group = group_of(text)
            generators = group.diagram.generators
            for q in (2, 3, 4, Fraction(7, 2)):
                for i, s in enumerate(generators):
                    for t in generators[i + 1:]:
                        with self.subTest(type=text, q=q, s=s, t=t):
                            self.assertTrue(braid_relation_holds(group, s, t, q))

    def test_reduced_words_give_basis_elements(self):
        group = group_of("C2~")
        q = Fraction(5, 2)
        for k in range(4):
            for w in group.elements_of_length(k):
                self.assertEqual(basis_element(group, w, q), word_element(group, group.reduced_word(w), q))


class TestMultiplication(BtbTestCase):

    def test_unit(self):
        group = group_of("A2~")
        one = basis_element(group, group.identity, 2)
        x = word_element(group, [0, 1, 1, 2], 2) + 3
        self.assertEqual(x, one * x)
        self.assertEqual(x, x * one)

    @given(
        a=st.lists(st.integers(min_value=0, max_value=2), max_size=4),
        b=st.lists(st.integers(min_value=0, max_value=2), max_size=4),
        c=st.lists(st.integers(min_value=0, max_value=2), max_size=4),
        q=st.sampled_from([2, 3, Fraction(7, 2)]),
    )
    @settings(max_examples=30, deadline=None)
    def test_associativity(self, a, b, c, q):
        group = group_of("A2~")
        x, y, z = (word_element(group, word, q) for word in (a, b, c))
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)

    def test_linear_combinations(self):
        group = group_of("A1~")
        e_0, e_1 = generator_element(group, 0, 2), generator_element(group, 1, 2)
        x = e_0 - e_1 * Fraction(1, 2)
        self.assertTrue((x - x).is_zero())
        self.assertEqual(-x, x * -1)
        self.assertEqual(2 * x, x + x)

    def test_mismatch(self):
        group = group_of("A2~")
        with self.assertRaises(HeckeMismatchError):
            generator_element(group, 0, 2) + generator_element(group, 0, 3)
        with self.assertRaises(HeckeMismatchError):
            generator_element(group, 0, 2) * generator_element(group_of("A1~"), 0, 2)

    def test_to_dict(self):
        group = group_of("A1~")
        x = word_element(group, [0, 0], 2)
        self.assertEqual(
            {
                "q": 2,
                "terms": [
                    {"word": [], "coefficient": 2},
                    {"word": [0], "coefficient": 1},
                ],
            },
            x.to_dict(),
        )


class TestSpecialCharacter(BtbTestCase):

    def test_values(self):
        group = group_of("A2~")
        self.assertEqual(1, special_character(basis_element(group, group.identity, 2)))
        self.assertEqual(-1, special_character(generator_element(group, 1, 2)))
        self.assertEqual(1, special_character(word_element(group, [0, 1], 2)))
        self.assertEqual(-1, special_character(word_element(group, [0, 0, 0], 2)))

    def test_multiplicative(self):
        group = group_of("A2~")
        for q, max_length in ((2, 4), (Fraction(7, 2), 2)):
            elements = [
                basis_element(group, w, q)
                for k in range(max_length + 1) for w in group.elements_of_length(k)
            ]
            for x in elements:
                for y in elements:
                    self.assertEqual(
                        special_character(x) * special_character(y),
                        special_character(x * y),
                    )
