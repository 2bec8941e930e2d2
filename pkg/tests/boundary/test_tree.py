from btb.building import apartment_vertex, standard_lattice
from btb.boundary import TreeSphere, standard_sphere, sphere_vertex_count, end_count
from tests.base import BtbTestCase


class TestTreeSphere(BtbTestCase):

    def test_counts(self):
        self.assertEqual(10, sphere_vertex_count(2, 2))
        self.assertEqual(6, end_count(2, 2))
        self.assertEqual(1, sphere_vertex_count(5, 0))
        self.assertEqual(0, end_count(5, 0))

        for p, radius in ((2, 1), (2, 3), (3, 2)):
            sphere = standard_sphere(radius, self.context(2, p, radius))
            self.assertEqual(sphere_vertex_count(p, radius), len(sphere))
            self.assertEqual(end_count(p, radius), len(sphere.ends()))
            self.assertEqual(len(sphere) - 1, len(sphere.edges()))

    def test_paths(self):
        ctx = self.context(2, 2, 3)
        sphere = standard_sphere(3, ctx)
        target = apartment_vertex((0, 3), ctx)
        self.assertIn(target, sphere)
        self.assertEqual(
            [apartment_vertex((0, k), ctx) for k in range(4)],
            sphere.path_from_origin(target),
        )
        self.assertEqual([sphere.origin], sphere.path_from_origin(sphere.origin))
        self.assertEqual(sphere.origin, sphere.vertices[0])

    def test_ends_point_outward(self):
        sphere = standard_sphere(2, self.context(2, 3, 2))
        for t, s in sphere.ends():
            self.assertEqual(1, sphere.depth[t])
            self.assertEqual(2, sphere.depth[s])

    def test_errors(self):
        with self.assertRaises(ValueError):
            TreeSphere(standard_lattice(0, self.context(3, 2, 1)), 1, self.context(3, 2, 1))
        with self.assertRaises(ValueError):
            standard_sphere(-1, self.context(2, 2, 1))
        with self.assertRaises(ValueError):
            standard_sphere(0, self.context(2, 2, 1)).ends()
