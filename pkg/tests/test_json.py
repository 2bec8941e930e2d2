import unittest
from fractions import Fraction

import numpy as np

from btb.util.serializer import to_json, dict_to_fraction, fraction_to_dict


class TestJson(unittest.TestCase):

    def test_fraction(self):
        self.assertEqual(
            '{"a":{"num":"1","den":"3"}}',
            to_json({"a": Fraction(1, 3)})
        )
        self.assertEqual(
            '{"a":[{"num":"-5","den":"1"}]}',
            to_json({"a": [Fraction(-5)]})
        )

    def test_fraction_round_trip(self):
        x = Fraction(-123456789123456789, 2 ** 70)
        self.assertEqual(x, dict_to_fraction(fraction_to_dict(x)))

    def test_numpy(self):
        self.assertEqual(
            '{"m":[[1,2],[3,4]]}',
            to_json({"m": np.array([[1, 2], [3, 4]], dtype=np.int64)})
        )

    def test_no_floats(self):
        with self.assertRaises(TypeError):
            to_json({"a": 0.5})
        self.assertEqual('{"a":"inf"}', to_json({"a": float("inf")}))

    def test_to_dict(self):
        class Thing:
            def to_dict(self):
                return {"x": Fraction(1, 2)}

        self.assertEqual('{"t":{"x":{"num":"1","den":"2"}}}', to_json({"t": Thing()}))
