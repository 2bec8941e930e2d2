from btb import config
from btb.coxeter import group
from tests.base import BtbTestCase


class TestConfig(BtbTestCase):

    def test_config_overload(self):
        normal_value = config.LENGTH_CUTOFF

        with config.ConfigOverload({
            "LENGTH_CUTOFF": 5,
        }):
            self.assertEqual(5, config.LENGTH_CUTOFF)
            self.assertNotEqual(normal_value, config.LENGTH_CUTOFF)

            # also check that imported other module's config is overloaded
            self.assertEqual(5, group.config.LENGTH_CUTOFF)

            self.assertEqual("5", config.to_dict(string_values=True)["LENGTH_CUTOFF"])

        self.assertEqual(normal_value, config.LENGTH_CUTOFF)
        self.assertEqual(normal_value, group.config.LENGTH_CUTOFF)

    def test_overload_casts_to_type(self):
        with config.ConfigOverload({"PRECISION_MARGIN": "3"}):
            self.assertEqual(3, config.PRECISION_MARGIN)

    def test_overload_rejects_bad_values(self):
        with self.assertRaises(KeyError):
            config.ConfigOverload({"NO_SUCH_SETTING": 1})
        with self.assertRaises(ValueError):
            config.ConfigOverload({"PRECISION_MARGIN": -1})
        with self.assertRaises(ValueError):
            config.ConfigOverload({"OUTPUT_FORMAT": "xml"})

    def test_overload_flags(self):
        with config.ConfigOverload({"DEBUG": "false", "VERBOSE": "yes"}):
            self.assertIs(False, config.DEBUG)
            self.assertIs(True, config.VERBOSE)
