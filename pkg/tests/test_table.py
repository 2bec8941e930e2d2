import io
import tempfile
from fractions import Fraction
from pathlib import Path

from btb.util.table import format_cell, render_table, write_output
from tests.base import BtbTestCase


class TestTable(BtbTestCase):

    ROWS = [
        {"k": 0, "value": Fraction(1), "equal": True},
        {"k": 1, "value": Fraction(-1, 2), "equal": False},
    ]

    def test_format_cell(self):
        self.assertEqual("1/3", format_cell(Fraction(1, 3)))
        self.assertEqual("-4", format_cell(Fraction(-4)))
        self.assertEqual("yes", format_cell(True))
        self.assertEqual("[1, 1/2]", format_cell([1, Fraction(1, 2)]))
        self.assertEqual("", format_cell(None))

    def test_csv(self):
        self.assertEqual(
            "k,value,equal\n0,1,yes\n1,-1/2,no\n",
            render_table(self.ROWS, "csv"),
        )

    def test_table(self):
        self.assertEqual(
            "k  value  equal\n"
            "-  -----  -----\n"
            "0  1      yes\n"
            "1  -1/2   no\n"
            "\n"
            "done\n",
            render_table(self.ROWS, "table", summary=["done"]),
        )

    def test_json(self):
        text = render_table(self.ROWS[:1], "json")
        self.assertIn('"value": {', text)
        self.assertIn('"num": "1"', text)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            render_table(self.ROWS, "xml")

    def test_write_output(self):
        file = io.StringIO()
        write_output("abc\n", file=file)
        self.assertEqual("abc\n", file.getvalue())

        with tempfile.TemporaryDirectory() as path:
            filename = Path(path) / "out.csv"
            write_output("abc\n", filename=filename)
            self.assertEqual("abc\n", filename.read_text())
