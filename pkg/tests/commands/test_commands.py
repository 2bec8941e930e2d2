import argparse
import contextlib
import io
import json
import tempfile
from pathlib import Path

from btb.commands import registered_commands, EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE
from btb.main import add_arguments, main
from tests.base import BtbTestCase


class TestCommands(BtbTestCase):

    def run_command(self, name: str, **values):
        file = io.StringIO()
        status = registered_commands[name].run_from_values(values, file=file)
        return status, file.getvalue()

    def test_registered(self):
        self.assertEqual(
            {"growth", "period", "ball", "harmonic", "hecke", "boundary"},
            set(registered_commands),
        )

    def test_growth(self):
        status, text = self.run_command("growth", type="A1~", K="6")
        self.assertEqual(EXIT_OK, status)
        self.assertIn("ok: N(0..6) enumerated equals closed form", text)
        self.assertIn("P(X) = ", text)

    def test_growth_json(self):
        status, text = self.run_command("growth", type="C2~", K="5", format="json")
        self.assertEqual(EXIT_OK, status)
        data = json.loads(text)
        self.assertEqual([1, 3, 5, 8, 11, 13], data["enumerated"])
        self.assertEqual(data["enumerated"], data["closed_form"])
        self.assertTrue(data["passed"])
        self.assertEqual(text, self.run_command("growth", type="C2~", K="5", format="json")[1])

    def test_usage_errors(self):
        self.assertEqual(EXIT_USAGE, self.run_command("growth", type="Z9~")[0])
        self.assertEqual(EXIT_USAGE, self.run_command("growth", K="-1")[0])
        self.assertEqual(EXIT_USAGE, self.run_command("period", q="1")[0])
        self.assertEqual(EXIT_USAGE, self.run_command("ball", n="4")[0])
        self.assertEqual(EXIT_USAGE, self.run_command("ball", p="6")[0])
        self.assertEqual(EXIT_USAGE, self.run_command("hecke", q="x")[0])
        self.assertEqual(EXIT_USAGE, self.run_command("growth", format="xml")[0])

    def test_runtime_error(self):
        # a geometric radius needs a prime q
        self.assertEqual(EXIT_CHECK_FAILED, self.run_command("period", type="A1~", q="4", R="2")[0])

    def test_period(self):
        status, text = self.run_command("period", type="A1~", q="2", K="6", format="json")
        self.assertEqual(EXIT_OK, status)
        data = json.loads(text)
        self.assertEqual({"num": "1", "den": "3"}, data["closed_form"])
        self.assertEqual(7, len(data["geometric"]))
        self.assertTrue(all(check["passed"] for check in data["checks"]))

    def test_period_without_geometry(self):
        status, text = self.run_command("period", type="G2~", q="3", K="8")
        self.assertEqual(EXIT_OK, status)
        self.assertIn("q_E: 9", text)

    def test_ball(self):
        status, text = self.run_command("ball", n="3", p="2", R="2", format="json")
        self.assertEqual(EXIT_OK, status)
        data = json.loads(text)
        self.assertEqual([1, 6, 24], data["shell_counts"])
        self.assertEqual(31, len(data["ball"]["chambers"]))

    def test_harmonic(self):
        status, text = self.run_command("harmonic", n="2", p="2", R="4")
        self.assertEqual(EXIT_OK, status)
        self.assertIn("defects: 0 nonzero / ", text)

    def test_hecke(self):
        self.assertEqual(EXIT_OK, self.run_command("hecke", type="A2~", q="3", samples="3")[0])
        self.assertEqual(EXIT_OK, self.run_command("hecke", type="C2~", q="7/2")[0])

    def test_boundary(self):
        status, text = self.run_command("boundary", p="2", R="2", samples="5", format="csv")
        self.assertEqual(EXIT_OK, status)
        self.assertTrue(text.startswith("check,value,expected\n"))
        self.assertIn("end directions,6,6", text)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as path:
            filename = Path(path) / "growth.json"
            status, text = self.run_command("growth", type="A2~", K="3", format="json", out=str(filename))
            self.assertEqual(EXIT_OK, status)
            self.assertEqual("", text)
            self.assertEqual([1, 3, 6, 9], json.loads(filename.read_text())["closed_form"])

    def test_main(self):
        parser = argparse.ArgumentParser(prog="btb")
        add_arguments(parser)
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            status = main(parser.parse_args(["growth", "--type", "A1~", "--K", "3"]))
        self.assertEqual(EXIT_OK, status)
        self.assertIn("[1, 2, 2, 2]", stdout.getvalue())
