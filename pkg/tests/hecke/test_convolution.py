import itertools
import random

from btb.coxeter import AffineTypeLabel, affine_diagram, coxeter_group
from btb.building import weyl_to_chamber
from btb.harmonic import MapCochain, BoundaryFaceError
from btb.hecke import (
    convolve_chamber_function, convolve_by_relative_position, steinberg_relation_holds, word_element,
)
from tests.base import BtbTestCase


class TestConvolution(BtbTestCase):

    def test_indicator_of_base(self):
        graph = self.standard_ball(2, 2, 2)
        f = MapCochain.indicator(graph.base)
        for s in (0, 1):
            image = convolve_chamber_function(f, s, graph)
            self.assertEqual(2, len(image.support))
            self.assertEqual({1}, set(image.values.values()))
            self.assertNotIn(graph.base, image.support)
            self.assertEqual(image, convolve_by_relative_position(f, s, graph))

    def test_methods_agree(self):
        rng = random.Random(23)
        for n, p, radius in ((2, 2, 3), (2, 3, 3), (3, 2, 2)):
            graph = self.standard_ball(n, p, radius)
            inner = [c for c in graph.chambers if graph.dist(c) < radius]
            for _ in range(20):
                f = MapCochain({
                    c: rng.randint(-5, 5)
                    for c in rng.sample(inner, min(len(inner), rng.randint(1, 4)))
                })
                s = rng.randrange(n)
                self.assertEqual(
                    convolve_chamber_function(f, s, graph),
                    convolve_by_relative_position(f, s, graph),
                )

    def convolve_word(self, f: MapCochain, word, graph) -> MapCochain:
        for s in word:
            f = convolve_chamber_function(f, s, graph)
        return f

    def test_agrees_with_hecke_multiplication(self):
        for n, p, radius, max_length in ((2, 2, 4, 3), (3, 2, 2, 2)):
            graph = self.standard_ball(n, p, radius)
            group = coxeter_group(affine_diagram(AffineTypeLabel("A", n - 1)))
            base = MapCochain.indicator(graph.base)
            for k in range(max_length + 1):
                for word in itertools.product(range(n), repeat=k):
                    element = word_element(group, word, p)
                    expected = MapCochain()
                    for w, c in element.coefficients.items():
                        reduced = group.reduced_word(w)
                        position = self.convolve_word(base, reduced, graph)
                        self.assertEqual(p ** len(reduced), len(position.support))
                        self.assertIn(weyl_to_chamber(reduced, graph.ctx), position.support)
                        expected = expected + position * c
                    with self.subTest(n=n, word=word):
                        self.assertEqual(expected, self.convolve_word(base, word, graph))

    def test_quadratic_relation_on_functions(self):
        p = 3
        graph = self.standard_ball(2, p, 3)
        f = MapCochain.indicator(graph.shell(1)[:2])
        for s in (0, 1):
            f_s = convolve_chamber_function(f, s, graph)
            self.assertEqual(
                convolve_chamber_function(f_s, s, graph),
                f_s * (p - 1) + f * p,
            )

    def test_steinberg_relation(self):
        for n, p, radius in ((2, 2, 2), (3, 2, 2)):
            graph = self.standard_ball(n, p, radius)
            for chamber in graph.chambers:
                if graph.dist(chamber) < radius:
                    for s in range(n):
                        self.assertTrue(steinberg_relation_holds(chamber, s, graph))

    def test_boundary_support(self):
        graph = self.standard_ball(2, 2, 2)
        f = MapCochain.indicator(graph.shell(2)[0])
        with self.assertRaises(BoundaryFaceError):
            convolve_chamber_function(f, 0, graph)
        with self.assertRaises(BoundaryFaceError):
            convolve_by_relative_position(f, 0, graph)
