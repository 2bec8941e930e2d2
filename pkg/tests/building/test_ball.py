from btb.coxeter import AffineTypeLabel, affine_diagram, bfs_growth, coxeter_group
from btb.building import PrimeContext, PrecisionError, ball, standard_chamber, weyl_to_chamber
from tests.base import BtbTestCase


class TestBall(BtbTestCase):

    def test_shell_counts(self):
        self.assertEqual([1, 4], self.standard_ball(2, 2, 1).shell_counts())
        self.assertEqual([1, 4, 8, 16], self.standard_ball(2, 2, 3).shell_counts())
        self.assertEqual([1, 6, 24], self.standard_ball(3, 2, 2).shell_counts())

    def test_shells_follow_growth_series(self):
        for n, p, radius in ((2, 2, 6), (2, 3, 5), (3, 2, 3)):
            growth = bfs_growth(affine_diagram(AffineTypeLabel("A", n - 1)), radius).counts
            self.assertEqual(
                [growth[k] * p ** k for k in range(radius + 1)],
                self.standard_ball(n, p, radius).shell_counts(),
                f"n={n} p={p} R={radius}",
            )

    @BtbTestCase.tag_long()
    def test_shells_follow_growth_series_long(self):
        for n, p, radius in ((2, 5, 5), (3, 3, 3)):
            growth = bfs_growth(affine_diagram(AffineTypeLabel("A", n - 1)), radius).counts
            self.assertEqual(
                [growth[k] * p ** k for k in range(radius + 1)],
                self.standard_ball(n, p, radius).shell_counts(),
            )

    def test_interior_faces(self):
        for n, p, radius in ((2, 3, 3), (3, 2, 2)):
            graph = self.standard_ball(n, p, radius)
            for face in graph.interior_faces():
                chambers = graph.chambers_of(face)
                self.assertEqual(p + 1, len(chambers))
                self.assertTrue(all(c in graph for c in chambers))
            for chamber in graph.chambers:
                self.assertEqual(list(range(n)), sorted(chamber.labels))
                interior = [f for f in chamber.faces() if graph.is_interior(f)]
                if graph.dist(chamber) < radius:
                    self.assertEqual(n, len(interior))
                    self.assertEqual(n * p, len(graph.neighbours(chamber)))

    def test_adjacent_distances(self):
        graph = self.standard_ball(3, 2, 2)
        for chamber in graph.chambers:
            for face_type, other in graph.adjacency[chamber]:
                self.assertLessEqual(abs(graph.dist(chamber) - graph.dist(other)), 1)
                self.assertEqual(chamber.face(face_type), other.face(face_type))

    def test_distance_is_weyl_length(self):
        for n, max_length in ((2, 5), (3, 3)):
            graph = self.standard_ball(n, 2, max_length)
            group = coxeter_group(affine_diagram(AffineTypeLabel("A", n - 1)))
            for k in range(max_length + 1):
                for w in group.elements_of_length(k):
                    chamber = weyl_to_chamber(group.reduced_word(w), graph.ctx)
                    self.assertEqual(k, graph.dist(chamber))

    def test_base_and_index(self):
        graph = self.standard_ball(2, 2, 3)
        self.assertEqual(graph.base, graph.chambers[0])
        self.assertEqual(0, graph.index[graph.base])
        self.assertEqual(len(graph), len(graph.to_dict()["chambers"]))
        self.assertEqual([1, 4, 8, 16], graph.to_dict()["shell_counts"])

    def test_errors(self):
        ctx = PrimeContext(p=2, n=2, precision=3)
        with self.assertRaises(PrecisionError):
            ball(standard_chamber(ctx), 1, ctx)
        with self.assertRaises(ValueError):
            ball(standard_chamber(ctx), -1, ctx)
