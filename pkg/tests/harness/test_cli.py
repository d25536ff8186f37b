import io
import json
import os
import tempfile
from contextlib import redirect_stderr
from fractions import Fraction
from unittest import TestCase

import sqlalchemy as sa

from chebdisc.harness.cli import DEFAULT_TABLE, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stderr(err):
        code = main(list(argv), out=out)
    return code, out.getvalue(), err.getvalue()


def parse_lines(text):
    return dict(line.split(": ", 1) for line in text.strip().split("\n"))


class TestEval(TestCase):
    def test_exact(self):
        code, out, _ = run("eval", "--n", "1", "--N", "2", "--x", "0", "--mode", "exact")
        self.assertEqual(code, 0)
        self.assertEqual(out, "exact: -2\nexact_scaled: -2e+0\n")

    def test_rational_point(self):
        code, out, _ = run("eval", "--n", "1", "--N", "2", "--x", "1/2",
                           "--mode", "exact")
        self.assertEqual(code, 0)
        self.assertEqual(parse_lines(out)["exact"], "-1")

    def test_both(self):
        code, out, _ = run("eval", "--n", "50", "--N", "100", "--x", "-50")
        self.assertEqual(code, 0)
        values = parse_lines(out)
        self.assertEqual(values["regime"], "negative_a")
        self.assertEqual(values["eta"], "n/a")
        self.assertEqual(values["M"], "1e+0")
        self.assertLess(float(values["env_err"]), 0.1)
        for key in ("prefactor", "c0", "d0", "gamma", "asym", "envelope", "rel_err"):
            self.assertIn(key, values)

    def test_oscillatory(self):
        code, out, _ = run("eval", "--n", "25", "--N", "50", "--x", "20",
                           "--mode", "asym")
        self.assertEqual(code, 0)
        values = parse_lines(out)
        self.assertEqual(values["regime"], "oscillatory")
        self.assertNotEqual(values["eta"], "n/a")
        self.assertNotIn("exact", values)

    def test_fixed_x(self):
        code, out, _ = run("eval", "--n", "50", "--N", "100", "--x", "-1",
                           "--fixed-x")
        self.assertEqual(code, 0)
        values = parse_lines(out)
        self.assertEqual(values["gamma"], "n/a")
        self.assertAlmostEqual(float(values["rel_err"]), 0.01, places=9)

    def test_exit_codes(self):
        code, _, err = run("eval", "--n", "3", "--N", "2", "--x", "0")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error: "))
        code, _, _ = run("eval", "--n", "50", "--N", "100", "--x", "7", "--mode", "asym")
        self.assertEqual(code, 4)

    def test_invalid_arguments(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                main(["eval", "--n", "1", "--N", "2", "--x", "abc"])
        self.assertEqual(context.exception.code, 2)


class TestMapping(TestCase):
    def test_negative_a(self):
        code, out, _ = run("mapping", "--a", "-1/2", "--b", "1/2")
        self.assertEqual(code, 0)
        values = parse_lines(out)
        self.assertEqual(values["regime"], "negative_a")
        self.assertEqual(values["eta"], "n/a")
        self.assertEqual(values["bracket"], "n/a")

    def test_monotone(self):
        code, out, _ = run("mapping", "--a", "0.04", "--b", "0.5")
        self.assertEqual(code, 0)
        values = parse_lines(out)
        self.assertEqual(values["regime"], "monotone")
        self.assertLess(float(values["eta"]), -0.16)
        self.assertTrue(values["bracket"].startswith("["))

    def test_refusal(self):
        code, _, err = run("mapping", "--a", "0.6", "--b", "0.5")
        self.assertEqual(code, 4)
        self.assertIn("reflected", err)


class TestZeros(TestCase):
    def test_plain(self):
        code, out, _ = run("zeros", "--n", "1", "--N", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out, "s,zero\n1,1.0\n")

    def test_compare(self):
        code, out, _ = run("zeros", "--n", "5", "--N", "12", "--compare")
        self.assertEqual(code, 0)
        lines = out.strip().split("\n")
        self.assertEqual(lines[0],
                         "s,zero,kind,estimate,deviation,error_exponent,radius")
        self.assertEqual(len(lines), 6)
        self.assertEqual(lines[1].split(",")[2], "small")
        self.assertEqual(lines[5].split(",")[2], "large")


class TestVerify(TestCase):
    def test_csv_to_stdout(self):
        code, out, err = run("verify", "--a", "-1/2", "--b", "1/2", "--N", "20", "40",
                             "80")
        self.assertEqual(code, 0)
        lines = out.strip().split("\n")
        self.assertTrue(lines[0].startswith("a,b,N,x,regime"))
        self.assertEqual(len(lines), 4)
        self.assertIn("slope a=-1/2 b=1/2 points=3", err)

    def test_json_file_and_database(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "rows.json")
            url = f"sqlite:///{os.path.join(tmpdir, 'results.db')}"
            code, out, _ = run("verify", "--a", "-1/2", "2/5", "--b", "1/2",
                               "--N", "20", "40", "--format", "json", "--out", path,
                               "--db", url, "--sweep-id", "cli")
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path) as fp:
                document = json.load(fp)
            self.assertEqual(len(document["rows"]), 4)
            self.assertEqual(document["slopes"], [])

            engine = sa.create_engine(url)
            table = sa.Table(DEFAULT_TABLE, sa.MetaData(), autoload_with=engine)
            with engine.connect() as conn:
                sweep_ids = [row[0] for row in conn.execute(sa.select(table.c.sweep_id))]
            engine.dispose()
            self.assertEqual(sweep_ids, ["cli"] * 4)

    def test_rows_replay_through_eval(self):
        code, out, _ = run("verify", "--a", "1/3", "--b", "1/2", "--N", "50", "--all-x")
        self.assertEqual(code, 0)
        header, line = out.strip().split("\n")
        cells = dict(zip(header.split(","), line.split(",")))
        self.assertEqual(cells["x"], "50/3")
        n = Fraction(cells["b"]) * int(cells["N"])
        code, out, _ = run("eval", "--n", str(n), "--N", cells["N"], "--x", cells["x"],
                           "--mode", "exact")
        self.assertEqual(code, 0)
        sign = "-" if cells["exact_sign"] == "-1" else ""
        scaled = f"{sign}{cells['exact_mantissa']}e{int(cells['exact_exp10']):+d}"
        self.assertEqual(parse_lines(out)["exact_scaled"], scaled)
