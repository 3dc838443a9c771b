#!/usr/bin/env python3
"""
Integration tests for desk-scale verification

Full-density injectivity and coverage scans of theorem configurations,
remark chains over their stated parameter ranges, and bound audits over
the whole corpus. These take seconds rather than milliseconds.
"""

import io
import json
import math
import os
import unittest
import sys
from contextlib import redirect_stdout
from pathlib import Path

# Add parent directory to path to import project modules
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from bounds import M0_PRIME, audit_bounds, extract_coefficients
from landau_cli import run
from radii import theorem_radius, remark_chain
from verify import CORPUS_NAMES, corpus, injectivity_scan, verify_classical, verify_theorem

GRID_N = int(os.getenv("LANDAU_TEST_GRID_N", "128"))


def _grid(start, stop, step=0.1):
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 10) for k in range(count)]


class TestTheoremConfigurations(unittest.TestCase):

    def test_t210_configurations(self):
        """|z|^2 f_{1,2}(z; M) is univalent and covers U_{0.99 sigma} at 0.999 rho."""
        for M in (1.5, 3.0):
            with self.subTest(M=M):
                result = verify_theorem("T210", M=M, grid_n=GRID_N)
                self.assertTrue(result.injectivity.passed, result.injectivity.witness)
                self.assertTrue(result.coverage.passed, result.coverage.uncovered)
                self.assertLessEqual(result.coverage.max_deviation, 1e-6)
                self.assertEqual(result.status, "ok")
                self.assertGreater(result.min_jacobian, 0)

    def test_t210_at_full_radius(self):
        rho = theorem_radius("T210", M=1.5).rho
        F = corpus("bih_g", M=1.5)
        self.assertTrue(injectivity_scan(F.evaluate, rho, grid_n=GRID_N).passed)

    def test_classical_configuration(self):
        for M in (1.5, 2.0, 4.0):
            with self.subTest(M=M):
                result = verify_classical(M, grid_n=GRID_N)
                self.assertTrue(result.injectivity.passed)
                self.assertTrue(result.coverage.passed)
                self.assertLessEqual(result.coverage.max_deviation, 1e-6)
                self.assertEqual(result.status, "ok")
                self.assertLessEqual(result.extras["min_boundary_stretch"], 1e-8)

    def test_classical_at_one(self):
        result = verify_classical(1.0, grid_n=GRID_N)
        self.assertEqual(result.status, "ok")
        self.assertEqual(set(result.coverage.windings), {1})

    def test_every_theorem_configuration(self):
        """Each theorem's composite mapping passes both scans at a moderate grid."""
        cases = [
            ("A", {"M": 1.5}), ("B", {"M": 2.0}), ("D", {"M1": 1.0, "M2": 2.0}),
            ("E", {"M1": 1.0, "M2": 2.0}), ("F", {"M": 2.0}), ("G", {"M": 2.0}),
            ("T26", {"M1": 0.5, "M2": 3.0}), ("T26p", {"M1": 0.5, "M2": 3.0}),
            ("T28", {"M1": 2.0, "M2": 1.5}), ("T28p", {"M1": 2.0, "M2": 1.5}),
            ("T210p", {"M": 2.0}), ("C212", {"M": 3.0}), ("C212p", {"M": 3.0}),
        ]
        for tag, params in cases:
            with self.subTest(theorem=tag, **params):
                result = verify_theorem(tag, grid_n=64, **params)
                self.assertEqual(result.status, "ok")
                self.assertLessEqual(result.coverage.max_deviation, 1e-6)


class TestRemarkChainRanges(unittest.TestCase):

    def test_two_bound_chains(self):
        for tag in ("R27", "R29"):
            for M1 in (0.5, 1.0, 2.0):
                with self.subTest(remark=tag, M1=M1):
                    report = remark_chain(tag, _grid(2.2976, 10.0), M1=M1)
                    self.assertTrue(all(row.holds for row in report.rows))
                    self.assertTrue(all(row.equalities == [] for row in report.rows))
                    self.assertEqual(report.status, "ok")

    def test_r211_with_equality_below_crossover(self):
        report = remark_chain("R211", _grid(1.1, 10.0))
        self.assertEqual(report.status, "ok")
        for row in report.rows:
            with self.subTest(M=row.params["M"]):
                self.assertTrue(row.passed)
                equal = "rho:r==rho_old" in row.equalities
                self.assertEqual(equal, row.params["M"] <= M0_PRIME)

    def test_r213_strict(self):
        report = remark_chain("R213", _grid(2.3, 10.0))
        self.assertEqual(len(report.rows), 78)
        self.assertTrue(all(row.passed for row in report.rows))
        self.assertEqual(report.status, "ok")


class TestCoefficientSharpness(unittest.TestCase):

    def test_strip_maps(self):
        for M in (1.0, 2.0, 5.0):
            with self.subTest(M=M):
                pairs = extract_coefficients(corpus("vstrip", M=M).mapping, 4)
                self.assertAlmostEqual(pairs[0].modulus_sum, 4 * M / math.pi, delta=1e-8)
        pairs = extract_coefficients(corpus("vstrip_m", M=2.0, m=3).mapping, 4)
        self.assertAlmostEqual(pairs[2].modulus_sum, 8 / math.pi, delta=1e-8)

    def test_extremal(self):
        pairs = extract_coefficients(corpus("f_an", M=2, a=1, n=3).mapping, 4)
        self.assertAlmostEqual(pairs[0].a_n, 1, delta=1e-8)
        self.assertAlmostEqual(abs(pairs[2].a_n), 1.5, delta=1e-8)

    def test_corpus_audits_pass(self):
        """Every corpus entry satisfies the bound of its declared hypothesis up to n = 16."""
        for name in CORPUS_NAMES:
            entry = corpus(name)
            for target in entry.audit_targets:
                with self.subTest(corpus=name, part=target.label):
                    audit = audit_bounds(target.mapping, target.M, target.mode, n_max=16, map_name=name)
                    self.assertTrue(audit.passed)
                    self.assertGreaterEqual(min(row.slack for row in audit.rows), -1e-8)


class TestCommandLine(unittest.TestCase):

    def test_compare_r213(self):
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            code = run(["compare", "--remark", "R213", "--grid", "2.5:10:0.5", "--config", os.devnull])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout.getvalue())["status"], "ok")

    def test_verify_classical(self):
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            code = run(["verify", "--theorem", "classical", "--M", "2", "--config", os.devnull])
        self.assertEqual(code, 0)
        report = json.loads(stdout.getvalue())
        self.assertEqual(report["corpus"], "landau_classic")
        self.assertTrue(report["injectivity"]["passed"])

    def test_verify_classical_at_one(self):
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            code = run(["verify", "--theorem", "classical", "--M", "1", "--grid-n", "32", "--config", os.devnull])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout.getvalue())["status"], "ok")


if __name__ == '__main__':
    unittest.main()
