#!/usr/bin/env python3

import io
import json
import unittest
from contextlib import redirect_stdout, redirect_stderr

from sapphire.cohomology.cli import (main, build_parser, RunConfig, EXIT_OK, EXIT_FAILED,
                                     EXIT_INVALID)
from sapphire.cohomology.coefficients import module_trivial_Z, module_Zp
from sapphire.cohomology.group import GroupParams


def run(*argv):
    """Run the command line and capture both streams

    Return:
        Tuple of exit code, stdout and stderr
    """
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class RunConfigTestCase(unittest.TestCase):
    def parse(self, *argv):
        return RunConfig.from_args(build_parser().parse_args(list(argv)))

    def test_defaults(self):
        cfg = self.parse("compute", "--params", "1,2,-1,-1")
        self.assertEqual(GroupParams(1, 2, -1, -1), cfg.params)
        self.assertListEqual([], cfg.coefficients)
        self.assertEqual(("text", 0, "WARNING"), (cfg.output_format, cfg.seed, cfg.log_level))
        self.assertEqual((200, 500, False), (cfg.samples, cfg.triples, cfg.inject_fault))
        self.assertListEqual([module_trivial_Z()], cfg.modules())

    def test_coefficients(self):
        cfg = self.parse("products", "--params", "1,1,-5,-4", "--coeff", "Zp:5",
                         "--coeff", "Z", "--format", "json")
        self.assertListEqual(["Zp:5", "Z"], [expr for expr, _ in cfg.coefficients])
        self.assertListEqual([module_Zp(5), module_trivial_Z()], cfg.modules())
        self.assertEqual("json", cfg.output_format)

    def test_verify(self):
        cfg = self.parse("verify", "--seed", "42", "--samples", "3", "--inject-fault")
        self.assertIsNone(cfg.params)
        self.assertEqual((42, 3, 500, True), (cfg.seed, cfg.samples, cfg.triples, cfg.inject_fault))


class CliTestCase(unittest.TestCase):
    def test_compute(self):
        code, out, err = run("compute", "--params", "1,2,-1,-1", "--coeff", "Z")
        self.assertEqual(EXIT_OK, code)
        self.assertIn("Z_2 + Z_2 + Z_4", out)
        self.assertEqual("", err)

    def test_compute_deterministic(self):
        first = run("compute", "--params", "1,1,-2,-1", "--coeff", "Zeta:-1,1,-1")
        second = run("compute", "--params", "1,1,-2,-1", "--coeff", "Zeta:-1,1,-1")
        self.assertEqual(first, second)

    def test_compute_json(self):
        code, out, _ = run("compute", "--params", "1,1,-5,-4", "--coeff", "Zp:5",
                           "--format", "json")
        self.assertEqual(EXIT_OK, code)
        document = json.loads(out)
        self.assertListEqual([1, 1, -5, -4], document["params"])
        upper = [r for r in document["results"] if r["kind"] == "cohomology"]
        self.assertListEqual([0, 1, 2, 3], [r["degree"] for r in upper])
        for result in upper:
            self.assertDictEqual({"free_rank": 0, "torsion": [5]}, result["group"])

    def test_rejected_params(self):
        code, out, err = run("compute", "--params", "1,1,0,1", "--coeff", "Z")
        self.assertEqual(EXIT_INVALID, code)
        self.assertEqual("", out)
        self.assertIn("zero-parameter", err)

        code, _, err = run("compute", "--params", "1,1,1,1")
        self.assertEqual(EXIT_INVALID, code)
        self.assertIn("unimodularity-violation", err)

        code, _, err = run("compute", "--params", "1,2,-1")
        self.assertEqual(EXIT_INVALID, code)
        self.assertIn("invalid-arguments", err)

        code, _, err = run("products", "--coeff", "Z")
        self.assertEqual(EXIT_INVALID, code)
        self.assertIn("--params", err)

    def test_bad_coefficients(self):
        code, _, err = run("compute", "--params", "1,2,-1,-1", "--coeff", "Q")
        self.assertEqual(EXIT_INVALID, code)
        self.assertIn("coefficient-syntax-error", err)

        code, _, err = run("compute", "--params", "1,1,-2,-1", "--coeff", "Zeta:1,-1,1")
        self.assertEqual(EXIT_INVALID, code)
        self.assertIn("invalid-character", err)

        code, _, err = run("products", "--params", "1,2,-1,-1",
                           "--coeff", "Z", "--coeff", "Z", "--coeff", "Z")
        self.assertEqual(EXIT_INVALID, code)
        self.assertIn("invalid-arguments", err)

    def test_products_empty(self):
        code, out, _ = run("products", "--params", "1,2,-1,-1", "--coeff", "Z")
        self.assertEqual(EXIT_OK, code)
        self.assertTrue(out.rstrip().endswith("no products"))

    def test_products_twisted(self):
        code, out, _ = run("products", "--params", "1,1,-2,-1", "--coeff", "Zeta:1,1,-1",
                           "--coeff", "Zeta:-1,1,1", "--format", "json")
        self.assertEqual(EXIT_OK, code)
        results = json.loads(out)["results"]
        self.assertEqual("Zeta:1,1,-1", results["left"])
        degree_two = [p for p in results["products"] if p["bidegree"] == [1, 1]]
        self.assertTrue(degree_two)
        self.assertTrue(all(not any(p["result"]) for p in degree_two))

    def test_products_single_module(self):
        code, out, _ = run("products", "--params", "1,1,-2,-1", "--coeff", "Zeta:-1,1,-1")
        self.assertEqual(EXIT_OK, code)
        self.assertIn("Zeta:-1,1,-1 x Zeta:-1,1,-1", out.splitlines()[0])
        self.assertIn("H1:0 over Zeta:-1,1,-1", out)

    def test_verify_fault(self):
        code, out, _ = run("verify", "--params", "1,2,-1,-1", "--samples", "5",
                           "--triples", "5", "--inject-fault")
        self.assertEqual(EXIT_FAILED, code)
        self.assertIn("FAIL", out)

    def test_verify_json(self):
        code, out, _ = run("verify", "--params", "1,2,-1,-1", "--samples", "5",
                           "--triples", "5", "--format", "json")
        self.assertEqual(EXIT_OK, code)
        results = json.loads(out)["results"]
        self.assertTrue(all(r["passed"] for r in results))
        self.assertEqual("torsion-oracle", results[-1]["name"])

    def test_usage_errors(self):
        with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit) as ctx:
            main(["compute", "--format", "xml"])
        self.assertEqual(2, ctx.exception.code)

        with redirect_stdout(io.StringIO()) as out, self.assertRaises(SystemExit) as ctx:
            main(["--version"])
        self.assertEqual(0, ctx.exception.code)
        self.assertTrue(out.getvalue().startswith("sapphire-cohomology"))


def suite():
    """Get Test suite object
    """
    loader = unittest.TestLoader()
    return unittest.TestSuite([loader.loadTestsFromTestCase(case)
                               for case in (RunConfigTestCase, CliTestCase)])


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
