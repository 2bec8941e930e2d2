import random
from fractions import Fraction

from btb.harmonic import (
    MapCochain, BoundaryFaceError, iwahori_vector,
    harmonicity_defect, min_distance_chamber, decay_profile, defect_scan,
    finite_support_rigidity, is_invariant,
)
from tests.base import BtbTestCase


class TestHarmonicity(BtbTestCase):

    def assertHarmonic(self, n: int, p: int, radius: int):
        graph = self.standard_ball(n, p, radius)
        f = iwahori_vector(graph.base, p)
        nonzero, count = defect_scan(f, graph)
        self.assertEqual(0, nonzero)
        self.assertGreater(count, 0)

    def test_iwahori_vector_is_harmonic(self):
        self.assertHarmonic(2, 2, 8)
        self.assertHarmonic(2, 3, 6)
        self.assertHarmonic(2, 3, 8)
        self.assertHarmonic(3, 2, 2)

    @BtbTestCase.tag_long()
    def test_iwahori_vector_is_harmonic_long(self):
        self.assertHarmonic(3, 3, 3)

    def test_wrong_q_is_not_harmonic(self):
        graph = self.standard_ball(2, 2, 3)
        f = iwahori_vector(graph.base, 3)
        nonzero, count = defect_scan(f, graph)
        self.assertEqual(count, nonzero)

    def test_defects(self):
        graph = self.standard_ball(3, 2, 2)
        face = graph.base.face(1)
        self.assertEqual(1, harmonicity_defect(MapCochain.indicator(graph.base), face, graph))
        self.assertEqual(3, harmonicity_defect(MapCochain.face_indicator(face, graph), face, graph))

    def test_boundary_face(self):
        graph = self.standard_ball(2, 2, 2)
        chamber = graph.shell(2)[0]
        outer = [face for face in chamber.faces() if not graph.is_interior(face)]
        self.assertEqual(1, len(outer))
        with self.assertRaises(BoundaryFaceError):
            harmonicity_defect(MapCochain.indicator(chamber), outer[0], graph)
        with self.assertRaises(BoundaryFaceError):
            min_distance_chamber(outer[0], graph)

    def test_min_distance_chamber(self):
        graph = self.standard_ball(3, 2, 2)
        for face in graph.base.faces():
            self.assertEqual((graph.base, 0), min_distance_chamber(face, graph))

    def test_min_distance_chamber_is_unique(self):
        for n, p, radius in ((2, 2, 8), (2, 3, 6), (3, 2, 2)):
            graph = self.standard_ball(n, p, radius)
            for face in graph.interior_faces():
                chamber, delta = min_distance_chamber(face, graph)
                distances = sorted(graph.dist(c) for c in graph.chambers_of(face))
                with self.subTest(n=n, p=p, face=face):
                    self.assertIn(chamber, graph.chambers_of(face))
                    self.assertEqual(delta, graph.dist(chamber))
                    self.assertEqual([delta] + [delta + 1] * p, distances)

    def test_decay(self):
        graph = self.standard_ball(2, 2, 6)
        profile = decay_profile(iwahori_vector(graph.base, 2), graph)
        self.assertEqual(7, len(profile))
        self.assertEqual((4, Fraction(1, 16)), profile[4])
        for k, value in profile:
            self.assertEqual(Fraction(1, 2 ** k), value)

    def test_rigidity(self):
        for n, p, radius in ((2, 2, 3), (2, 3, 3), (3, 2, 2)):
            self.assertTrue(finite_support_rigidity(self.standard_ball(n, p, radius)), f"n={n} p={p} R={radius}")

    def test_invariance(self):
        rng = random.Random(23)
        for n, p, radius in ((2, 3, 3), (3, 2, 2)):
            graph = self.standard_ball(n, p, radius)
            f = iwahori_vector(graph.base, p)
            for _ in range(3):
                g = [
                    [
                        rng.randint(1, p - 1) if i == j
                        else (rng.randint(-4, 4) if j > i else p * rng.randint(-2, 2))
                        for j in range(n)
                    ]
                    for i in range(n)
                ]
                self.assertTrue(is_invariant(f, g, graph), g)

    def test_invariance_fails_off_iwahori(self):
        graph = self.standard_ball(2, 2, 2)
        f = iwahori_vector(graph.base, 2)
        self.assertFalse(is_invariant(f, [[0, 1], [1, 0]], graph))
