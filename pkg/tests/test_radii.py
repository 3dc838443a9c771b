#!/usr/bin/env python3
"""
Unit tests for univalence and schlicht radius computations
"""

import math
import unittest
import sys
from pathlib import Path
from unittest.mock import patch

import numpy as np
from scipy.optimize import bisect

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from bounds import M0_PRIME
from maps_core import DomainError
from radii import (
    FAMILY_I,
    FAMILY_II,
    REMARK_IDS,
    THEOREM_IDS,
    THEOREM_TABLE,
    RadiusSpec,
    classical_landau,
    family1_phi,
    family1_schlicht,
    family1_solve,
    family2_schlicht,
    family2_solve,
    remark_chain,
    theorem_radius,
    theorem_spec,
)

SHARP_AT_ONE = ("F", "G", "T210", "T210p", "C212", "C212p")


class TestFamilyOne(unittest.TestCase):

    def test_linear_case(self):
        """lam = 1, m1 = 1 reduces to 1 - 2r = 0."""
        result = family1_solve(RadiusSpec(FAMILY_I, 1.0, m1=1.0))
        self.assertAlmostEqual(result.rho, 0.5, delta=1e-12)
        self.assertFalse(result.unconstrained)

    def test_unconstrained(self):
        result = family1_solve(RadiusSpec(FAMILY_I, 1.0))
        self.assertEqual(result.rho, 1.0)
        self.assertTrue(result.unconstrained)

    def test_theorem_a_against_grid_scan(self):
        """Bisection root agrees with the first sign change on a fine grid."""
        spec = theorem_spec("A", M=1)
        self.assertEqual((spec.lam_or_alpha, spec.m1, spec.c1, spec.c2_or_beta), (math.pi / 4, 1, 2, 2))
        result = family1_solve(spec)
        self.assertLessEqual(result.residual, 1e-10)

        r = np.linspace(0, 1 - 1e-6, 1_000_001)
        q = (1 - r) ** 2
        phi = spec.lam_or_alpha - 2 * spec.m1 * r - spec.c1 * r * r / q - spec.c2_or_beta * (2 * r - r * r) / q
        first = np.argmax(phi <= 0)
        self.assertGreater(first, 0)
        self.assertLessEqual(r[first - 1], result.rho)
        self.assertLessEqual(result.rho, r[first])

    def test_root_monotone_in_parameters(self):
        """The root falls as m1, c1 or c2 grows and rises with lam."""
        rng = np.random.default_rng(7)
        for _ in range(100):
            lam, m1, c1, c2 = rng.uniform(0.2, 2.0), *rng.uniform(0.1, 3.0, 3)
            base = family1_solve(RadiusSpec(FAMILY_I, lam, m1=m1, c1=c1, c2_or_beta=c2)).rho
            step = rng.uniform(0.05, 0.5)
            self.assertLess(family1_solve(RadiusSpec(FAMILY_I, lam, m1=m1 + step, c1=c1, c2_or_beta=c2)).rho, base)
            self.assertLess(family1_solve(RadiusSpec(FAMILY_I, lam, m1=m1, c1=c1 + step, c2_or_beta=c2)).rho, base)
            self.assertLess(family1_solve(RadiusSpec(FAMILY_I, lam, m1=m1, c1=c1, c2_or_beta=c2 + step)).rho, base)
            self.assertGreater(family1_solve(RadiusSpec(FAMILY_I, lam + step, m1=m1, c1=c1, c2_or_beta=c2)).rho, base)

    def test_residual_refined_when_root_is_near_one(self):
        """A steep root close to 1 still meets the 1e-10 residual."""
        spec = RadiusSpec(FAMILY_I, math.pi / 0.04, m1=0.01, c1=0.02, c2_or_beta=0.02)
        result = family1_solve(spec)
        self.assertGreater(result.rho, 0.97)
        self.assertLessEqual(result.residual, 1e-10)
        self.assertLessEqual(abs(family1_phi(spec, result.rho)), 1e-10)

    def test_coarse_tolerance_is_not_refined(self):
        coarse = family1_solve(theorem_spec("A", M=2), tol=1e-6)
        fine = family1_solve(theorem_spec("A", M=2))
        self.assertLess(coarse.iterations, fine.iterations)
        self.assertAlmostEqual(coarse.rho, fine.rho, delta=1e-6)

    def test_schlicht(self):
        self.assertEqual(family1_schlicht(RadiusSpec(FAMILY_I, 1.0), 0.5), 0.5)
        self.assertEqual(family1_schlicht(RadiusSpec(FAMILY_I, 0.7), 1.0), 0.7)

    def test_theorem_a_schlicht_positive(self):
        result = theorem_radius("A", M=1)
        spec = result.spec
        expected = spec.lam_or_alpha * result.rho - (spec.c1 * result.rho ** 3 + spec.c2_or_beta * result.rho ** 2) / (1 - result.rho)
        self.assertAlmostEqual(result.sigma, expected, delta=1e-15)
        self.assertGreater(result.sigma, 0)
        self.assertFalse(result.sigma_nonpositive)

    def test_domain_errors(self):
        with self.assertRaises(DomainError):
            family1_solve(RadiusSpec(FAMILY_I, 0.0, m1=1.0))
        with self.assertRaises(DomainError):
            family1_solve(RadiusSpec(FAMILY_II, 1.0))
        with self.assertRaises(DomainError):
            family1_schlicht(RadiusSpec(FAMILY_I, 1.0, c1=1.0), 1.0)


class TestFamilyTwo(unittest.TestCase):

    def test_closed_form(self):
        self.assertEqual(family2_solve(RadiusSpec(FAMILY_II, 1.0)).rho, 1.0)
        result = family2_solve(RadiusSpec(FAMILY_II, 1.0, c2_or_beta=1.0))
        self.assertAlmostEqual(result.rho, 1 / (3 + math.sqrt(5)), delta=1e-15)
        # smaller root of 4r^2 - 6r + 1 = 0
        self.assertAlmostEqual(result.rho, (6 - math.sqrt(20)) / 8, delta=1e-15)

    def test_theorem_b_at_one(self):
        expected = math.pi / (math.pi + 16 + 2 * math.sqrt(2 * math.pi + 64))
        self.assertAlmostEqual(theorem_radius("B", M=1).rho, expected, delta=1e-14)
        self.assertAlmostEqual(expected, 0.0875, delta=1e-4)

    def test_theorem_b_literal_formula(self):
        for M in (1, 2, 5, 10):
            with self.subTest(M=M):
                literal = math.pi / (math.pi + 16 * M * M + 2 * M * math.sqrt(2 * math.pi + 64 * M * M))
                self.assertAlmostEqual(theorem_radius("B", M=M).rho, literal, delta=1e-12)

    def test_schlicht(self):
        self.assertEqual(family2_schlicht(RadiusSpec(FAMILY_II, 1.0), 1.0), 1.0)
        value = family2_schlicht(RadiusSpec(FAMILY_II, 1.0, c2_or_beta=1.0), 0.1)
        self.assertAlmostEqual(value, 0.001 - 0.0001 / 0.9, delta=1e-15)

    def test_theorem_b_schlicht(self):
        result = theorem_radius("B", M=1)
        rho = result.rho
        self.assertAlmostEqual(result.sigma, (math.pi / 4) * rho ** 3 - 2 * rho ** 4 / (1 - rho), delta=1e-15)

    def test_domain_errors(self):
        with self.assertRaises(DomainError):
            family2_solve(RadiusSpec(FAMILY_II, 0.0, c2_or_beta=1.0))
        with self.assertRaises(DomainError):
            family2_schlicht(RadiusSpec(FAMILY_II, 1.0, c2_or_beta=1.0), 1.0)

    def test_closed_form_against_bisection(self):
        """Closed form agrees with bisection of alpha (1-r)^2 = beta (4r - 3r^2)."""
        rng = np.random.default_rng(2024)
        for alpha, beta in zip(rng.uniform(0.05, 2.0, 200), rng.uniform(0.05, 20.0, 200)):
            closed = family2_solve(RadiusSpec(FAMILY_II, alpha, c2_or_beta=beta)).rho
            root = bisect(lambda r: alpha * (1 - r) ** 2 - beta * (4 * r - 3 * r * r), 0.0, 1.0, xtol=1e-15)
            self.assertAlmostEqual(closed, root, delta=1e-10)


class TestTheoremTable(unittest.TestCase):

    def test_every_theorem_has_a_row(self):
        self.assertEqual(set(THEOREM_TABLE), set(THEOREM_IDS))

    def test_sharp_at_one(self):
        """rho = sigma = 1 exactly at M = 1."""
        for tag in SHARP_AT_ONE:
            with self.subTest(theorem=tag):
                result = theorem_radius(tag, M=1)
                self.assertEqual(result.rho, 1.0)
                self.assertEqual(result.sigma, 1.0)

    def test_continuity_towards_one(self):
        for tag in SHARP_AT_ONE:
            with self.subTest(theorem=tag):
                result = theorem_radius(tag, M=1 + 1e-12)
                self.assertAlmostEqual(result.rho, 1, delta=1e-2)
                self.assertAlmostEqual(result.sigma, 1, delta=1e-2)

    def test_family_one_residuals(self):
        """Residual |phi(rho)| stays below 1e-10 over the parameter grid."""
        values = (1, 1.5, 2.2976, 3, 5, 10)
        for tag, row in THEOREM_TABLE.items():
            if row.family != FAMILY_I:
                continue
            if row.parameters == ("M",):
                grid = [{"M": M} for M in values]
            else:
                grid = [{"M1": M1, "M2": M2} for M1 in values for M2 in values]
            for params in grid:
                with self.subTest(theorem=tag, **params):
                    result = theorem_radius(tag, **params)
                    self.assertLessEqual(abs(family1_phi(result.spec, result.rho)), 1e-10)
                    self.assertLessEqual(result.residual, 1e-10)
                    self.assertGreater(result.sigma, 0)

    def test_hypothesis_guards(self):
        test_cases = [
            ("T28", {"M1": 1, "M2": 0.5}),
            ("F", {"M": 0.9}),
            ("A", {"M": 0}),
            ("D", {"M1": 0, "M2": 2}),
            ("D", {"M2": 2}),
            ("G", {}),
        ]
        for tag, params in test_cases:
            with self.subTest(theorem=tag, **params):
                with self.assertRaises(DomainError):
                    theorem_radius(tag, **params)

    def test_bound_below_one_allowed_for_b_only(self):
        self.assertGreater(theorem_radius("B", M=0.8).rho, 0)
        for M in (0.8, 0.001):
            with self.subTest(M=M):
                with self.assertRaises(DomainError):
                    theorem_radius("A", M=M)

    def test_schlicht_radius_below_leading_term(self):
        """sigma <= lam rho (family I) and sigma <= alpha rho^3 (family II) on every row's grid."""
        values = (1, 1.5, 2.2976, 3, 5, 10)
        for tag, row in THEOREM_TABLE.items():
            if row.parameters == ("M",):
                grid = [{"M": M} for M in values]
            else:
                grid = [{"M1": M1, "M2": M2} for M1 in values for M2 in values]
            for params in grid:
                with self.subTest(theorem=tag, **params):
                    result = theorem_radius(tag, **params)
                    lead = result.spec.lam_or_alpha
                    self.assertGreater(result.rho, 0)
                    self.assertLessEqual(result.rho, 1)
                    if row.family == FAMILY_I:
                        self.assertLessEqual(result.sigma, lead * result.rho)
                    else:
                        self.assertLessEqual(result.sigma, lead * result.rho ** 3)

    def test_unknown_theorem(self):
        with self.assertRaises(DomainError) as ctx:
            theorem_spec("Z", M=1)
        self.assertIn("T210p", str(ctx.exception))

    def test_classical_landau(self):
        self.assertEqual(classical_landau(1), (1.0, 1.0))
        r0, R0 = classical_landau(2)
        self.assertAlmostEqual(r0, 2 - math.sqrt(3), delta=1e-15)
        self.assertAlmostEqual(R0, 2 * r0 * r0, delta=1e-16)
        with self.assertRaises(DomainError):
            classical_landau(0.5)


class TestRemarkChains(unittest.TestCase):

    def test_r213_strict_at_three(self):
        report = remark_chain("R213", [3.0])
        row = report.rows[0]
        radii = [row.radii[label] for label in ("r_prime", "r", "rho_old", "rho_oldest")]
        self.assertEqual(radii, sorted(radii, reverse=True))
        self.assertEqual(len(set(radii)), 4)
        self.assertTrue(row.passed)
        self.assertEqual(row.equalities, [])
        self.assertEqual(report.status, "ok")

    def test_r211_equality_below_crossover(self):
        """At M = 2 < M0' the sqrt branch of K wins and r equals rho_old."""
        row = remark_chain("R211", [2.0]).rows[0]
        self.assertGreater(row.radii["r_prime"], row.radii["r"])
        self.assertEqual(row.radii["r"], row.radii["rho_old"])
        self.assertIn("rho:r==rho_old", row.equalities)
        self.assertIn("sigma:r==rho_old", row.equalities)
        self.assertTrue(row.passed)

    def test_r211_strict_above_crossover(self):
        row = remark_chain("R211", [3.0]).rows[0]
        self.assertGreater(row.radii["r"], row.radii["rho_old"])
        self.assertEqual(row.equalities, [])

    def test_r27_with_pairs(self):
        row = remark_chain("R27", [(1.0, 3.0)]).rows[0]
        self.assertEqual(row.params, {"M1": 1.0, "M2": 3.0})
        self.assertGreater(row.radii["r_prime"], row.radii["r"])
        self.assertGreater(row.radii["r"], row.radii["rho_old"])
        self.assertTrue(row.passed)

    def test_r29_with_fixed_m1(self):
        report = remark_chain("R29", [3.0, 5.0], M1=0.5)
        self.assertEqual([row.params["M2"] for row in report.rows], [3.0, 5.0])
        self.assertTrue(all(row.passed for row in report.rows))

    def test_out_of_regime_is_exploratory(self):
        report = remark_chain("R213", [1.5])
        self.assertIsNone(report.rows[0].passed)
        self.assertEqual(report.rows[0].status, "exploratory")
        self.assertEqual(report.status, "exploratory")
        self.assertFalse(remark_chain("R213", [M0_PRIME]).rows[0].in_regime)

    def test_sigma_chain_recorded_when_rho_chain_fails(self):
        with patch("radii._relation_holds", return_value=(False, True)):
            row = remark_chain("R211", [3.0]).rows[0]
        self.assertFalse(row.passed)
        self.assertIn("rho:r==rho_old", row.equalities)
        self.assertIn("sigma:r==rho_old", row.equalities)

    def test_grid_order_preserved(self):
        grid = [5.0, 3.0, 4.0]
        report = remark_chain("R213", grid)
        self.assertEqual([row.params["M"] for row in report.rows], grid)

    def test_bad_grid_points(self):
        with self.assertRaises(DomainError):
            remark_chain("R27", [3.0])
        with self.assertRaises(DomainError):
            remark_chain("R211", [(1.0, 2.0)])
        with self.assertRaises(DomainError):
            remark_chain("R99", [2.0])

    def test_remark_ids(self):
        self.assertEqual(REMARK_IDS, ("R27", "R29", "R211", "R213"))


if __name__ == '__main__':
    unittest.main()
