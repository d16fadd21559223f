"""Unit tests for Folner windows and compressions."""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from arithmetic.scalars import ConsistencyError
from dilation import (
    FolnerWindow,
    boundary_identity,
    compress,
    convergence_table,
    folner_sequence,
    mult_defect,
    pairing_value,
    trace_identity,
)
from groups import IntegerGroup, build_group, regular_representation, symmetric

SHIFTS = range(-4, 5)


def geometric(r: Fraction):
    """u(m) = r^|m| on Z."""
    return lambda m: r ** abs(m)


class TestWindows(unittest.TestCase):
    """Window construction."""

    def test_intervals(self):
        windows = folner_sequence(IntegerGroup(), "intervals", 5)
        self.assertEqual([w.size for w in windows], [1, 2, 3, 4, 5])
        self.assertEqual(windows[-1].elements, (0, 1, 2, 3, 4))
        self.assertIn(3, windows[-1])
        self.assertNotIn(5, windows[-1])

    def test_invalid_windows(self):
        with self.assertRaises(ValueError):
            FolnerWindow(IntegerGroup(), ())
        with self.assertRaises(ValueError):
            FolnerWindow(IntegerGroup(), (1, 1))
        with self.assertRaises(ValueError):
            FolnerWindow(build_group("Z3"), (0, 3))

    def test_invalid_sequences(self):
        with self.assertRaises(ValueError):
            folner_sequence(build_group("Z3"), "intervals", 4)
        with self.assertRaises(ValueError):
            folner_sequence(IntegerGroup(), "whole_group")
        with self.assertRaises(ValueError):
            folner_sequence(IntegerGroup(), "intervals", 0)
        with self.assertRaises(ValueError):
            folner_sequence(IntegerGroup(), "balls", 3)


class TestCompression(unittest.TestCase):
    """Compressions of the regular representation."""

    def test_shift_matrix(self):
        window = FolnerWindow(IntegerGroup(), (0, 1, 2))
        expected = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        self.assertTrue(np.array_equal(compress(window, 1), expected))

    def test_whole_group_is_regular_representation(self):
        group = symmetric(3)
        window = folner_sequence(group, "whole_group")[0]
        for s in range(group.order):
            self.assertTrue(np.array_equal(compress(window, s), regular_representation(group, s)))

    def test_trace_identity(self):
        for window in folner_sequence(IntegerGroup(), "intervals", 12):
            self.assertEqual(trace_identity(window, 0), 1)
            for s in (-3, -1, 1, 5):
                self.assertEqual(trace_identity(window, s), 0)


class TestMultiplicativityDefect(unittest.TestCase):
    """Exact defect, bound and intersection ratios."""

    def test_integer_intervals(self):
        windows = folner_sequence(IntegerGroup(), "intervals", 64)
        for window in windows:
            n = window.size
            for s in SHIFTS:
                for t in SHIFTS:
                    report = mult_defect(window, s, t)
                    self.assertLessEqual(report.defect_sq, report.bound)
                    self.assertEqual(report.intersect_ratio, Fraction(max(n - abs(t), 0), n))

    def test_known_values(self):
        window = FolnerWindow(IntegerGroup(), tuple(range(10)))
        report = mult_defect(window, -1, 1)
        # q = 9 is the only point with t q outside F and s t q inside F
        self.assertEqual(report.defect_sq, Fraction(1, 10))
        self.assertEqual(report.bound, Fraction(2, 10))
        self.assertEqual(report.intersect_ratio, Fraction(9, 10))

    def test_whole_group_is_multiplicative(self):
        group = build_group("Z2xS3")
        window = folner_sequence(group, "whole_group")[0]
        for s in range(0, group.order, 5):
            for t in range(group.order):
                report = mult_defect(window, s, t)
                self.assertEqual(report.defect_sq, 0)
                self.assertEqual(report.bound, 0)

    def test_elements_outside_the_group(self):
        window = folner_sequence(symmetric(3), "whole_group")[0]
        for s, t in ((9, 1), (1, 6), (-1, 0), (0.5, 1)):
            with self.assertRaises(ValueError):
                mult_defect(window, s, t)
        with self.assertRaises(ValueError):
            boundary_identity(window, 6)
        interval = FolnerWindow(IntegerGroup(), (0, 1, 2))
        with self.assertRaises(ValueError):
            mult_defect(interval, 2 ** 40, 1)

    def test_boundary_identity(self):
        for window in folner_sequence(IntegerGroup(), "intervals", 20):
            for g in SHIFTS:
                ratios = boundary_identity(window, g)
                self.assertEqual(ratios["intersect_ratio"], 1 - ratios["symmetric_difference_ratio"] / 2)

    def test_convergence_table(self):
        windows = folner_sequence(IntegerGroup(), "intervals", 64)
        table = convergence_table(windows, -1, 1)
        self.assertEqual(len(table), 64)
        self.assertEqual(table[-1], {"n": 64, "defect_sq": "1/64", "bound": "1/32", "intersect_ratio": "63/64"})


class TestPairing(unittest.TestCase):
    """tau_F(T_F^k(compress(t)) compress(s))."""

    def test_geometric_example(self):
        window = FolnerWindow(IntegerGroup(), tuple(range(8)))
        value = pairing_value(window, geometric(Fraction(1, 2)), 3, -2, 2)
        self.assertEqual(value, Fraction(3, 256))

    def test_ratio_is_exact(self):
        u = geometric(Fraction(2, 3))
        for window in folner_sequence(IntegerGroup(), "intervals", 64):
            n = window.size
            for t in SHIFTS:
                for k in (0, 1, 3):
                    value = pairing_value(window, u, k, -t, t)
                    self.assertEqual(value / u(t) ** k, Fraction(max(n - abs(t), 0), n))

    def test_off_diagonal_pairs_vanish(self):
        u = geometric(Fraction(1, 3))
        window = FolnerWindow(IntegerGroup(), tuple(range(16)))
        for s in SHIFTS:
            for t in SHIFTS:
                if s + t != 0:
                    self.assertEqual(pairing_value(window, u, 2, s, t), 0)

    def test_float_symbol(self):
        window = FolnerWindow(IntegerGroup(), tuple(range(8)))
        value = pairing_value(window, lambda m: 0.5 ** abs(m), 3, -2, 2)
        self.assertAlmostEqual(value, 3 / 256)

    def test_inconsistent_symbol_is_detected(self):
        # A symbol that changes between calls breaks the closed form
        calls = []

        def drifting(m):
            calls.append(m)
            return Fraction(len(calls))

        window = FolnerWindow(IntegerGroup(), tuple(range(4)))
        with self.assertRaises(ConsistencyError):
            pairing_value(window, drifting, 1, -1, 1)

    def test_negative_power(self):
        window = FolnerWindow(IntegerGroup(), (0, 1))
        with self.assertRaises(ValueError):
            pairing_value(window, geometric(Fraction(1, 2)), -1, 0, 0)


if __name__ == '__main__':
    unittest.main()
