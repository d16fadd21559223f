"""Unit tests for the truncated dilation model on finite abelian groups."""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from arithmetic.scalars import I, CapacityError
from dilation import (
    NotPositiveDefiniteError,
    build_dilation,
    character_test_function,
    convolution_power,
    dilation_residual,
    evaluator_gap,
    fourier_coefficient,
    residual_table,
)
from groups import NotAbelianError, build_group, cyclic, symmetric
from multipliers import bochner_measure, fourier_transform, make_group_function, measure_from_weights

GROUPS = ("Z2", "Z3", "Z4", "Z2xZ2", "Z6")


def sample_multipliers(group, rng):
    """u = 1, a strictly mixing u and a u whose measure has zero weights."""
    n = group.order
    constant = make_group_function(group, [1] * n)
    mixing = rng.uniform(0.5, 1.5, size=n)
    mixing /= mixing.sum()
    sparse = rng.random(n)
    sparse[rng.permutation(n)[: n // 2]] = 0.0
    sparse[0] += 0.1
    sparse /= sparse.sum()
    return [
        constant,
        fourier_transform(measure_from_weights(group, list(mixing))),
        fourier_transform(measure_from_weights(group, list(sparse))),
    ]


class TestDilationIdentity(unittest.TestCase):
    """E_J U^k J f = T^k f for k <= K."""

    def test_residuals_vanish(self):
        rng = np.random.default_rng(53)
        for spec in GROUPS:
            group = build_group(spec)
            for u in sample_multipliers(group, rng):
                model = build_dilation(group, u, 4)
                for row in residual_table(model):
                    self.assertLess(row["residual"], 1e-12, f"{spec} k={row['k']}")
                    self.assertLess(row["evaluator_gap"], 1e-13, f"{spec} k={row['k']}")

    def test_random_test_functions(self):
        rng = np.random.default_rng(59)
        group = build_group("Z2xZ3")
        u = sample_multipliers(group, rng)[1]
        model = build_dilation(group, u, 3)
        for k in range(4):
            f = rng.normal(size=6) + 1j * rng.normal(size=6)
            self.assertLess(dilation_residual(model, k, f), 1e-12)
            self.assertLess(dilation_residual(model, k, f, evaluator="direct"), 1e-12)
            self.assertLess(evaluator_gap(model, k, f), 1e-13)

    def test_characters_are_eigenvectors(self):
        rng = np.random.default_rng(61)
        group = cyclic(5)
        u = sample_multipliers(group, rng)[1]
        model = build_dilation(group, u, 3)
        for t in range(5):
            for k in range(4):
                self.assertAlmostEqual(fourier_coefficient(model, k, t), complex(u(t)) ** k, places=12)
            image = model.power(character_test_function(model, t), 1)
            self.assertTrue(np.allclose(image, complex(u(t)) * character_test_function(model, t)))

    def test_identity_multiplier_is_trivial(self):
        group = cyclic(4)
        model = build_dilation(group, make_group_function(group, [1, 1, 1, 1]), 2)
        f = np.array([1.0, 2.0, 3.0, 4.0])
        for k in range(3):
            self.assertTrue(np.allclose(model.power(f, k), f))

    def test_trace_is_preserved(self):
        rng = np.random.default_rng(67)
        group = build_group("Z2xZ2")
        model = build_dilation(group, sample_multipliers(group, rng)[1], 3)
        f = rng.normal(size=4)
        for k in range(4):
            state = model.lift(f)
            for _ in range(k):
                state = model.step(state)
            self.assertAlmostEqual(model.trace(state).real, float(np.mean(f)), places=13)


class TestBuildDilation(unittest.TestCase):
    """Input validation."""

    def test_z4_example_is_accepted(self):
        group = cyclic(4)
        u = make_group_function(group, [1, I / 2, 0, -I / 2])
        model = build_dilation(group, u, 4)
        self.assertEqual(model.measure.exact_weights, [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4), 0])
        self.assertTrue(np.allclose(model.weights, [0.25, 0.5, 0.25, 0.0]))
        self.assertLess(max(row["residual"] for row in residual_table(model)), 1e-12)

    def test_not_positive_definite(self):
        group = cyclic(2)
        with self.assertRaises(NotPositiveDefiniteError):
            build_dilation(group, make_group_function(group, [1, 2]), 2)
        with self.assertRaises(NotPositiveDefiniteError):
            build_dilation(group, make_group_function(group, [2, 0]), 2)

    def test_state_cap(self):
        group = cyclic(6)
        with self.assertRaises(CapacityError):
            build_dilation(group, make_group_function(group, [1] * 6), 10)

    def test_truncation_bounds(self):
        group = cyclic(3)
        model = build_dilation(group, make_group_function(group, [1, 0, 0]), 2)
        with self.assertRaises(ValueError):
            model.power([1, 0, 0], 3)
        with self.assertRaises(ValueError):
            build_dilation(group, make_group_function(group, [1, 0, 0]), 0)
        with self.assertRaises(ValueError):
            model.lift([1, 0])

    def test_non_abelian(self):
        group = symmetric(3)
        with self.assertRaises(NotAbelianError):
            build_dilation(group, make_group_function(group, [1] * 6), 2)


class TestConvolution(unittest.TestCase):
    """Convolution powers of measures on the dual group."""

    def test_zero_power_is_point_mass(self):
        group = cyclic(3)
        measure = bochner_measure(group, make_group_function(group, [1, 0, 0]))
        self.assertTrue(np.allclose(convolution_power(measure, 0).weights, [1, 0, 0]))
        with self.assertRaises(ValueError):
            convolution_power(measure, -1)

    def test_powers_match_multiplier_powers(self):
        group = cyclic(4)
        measure = measure_from_weights(group, [0.1, 0.2, 0.3, 0.4])
        u = fourier_transform(measure)
        for k in range(5):
            u_k = fourier_transform(convolution_power(measure, k)).as_complex()
            self.assertTrue(np.allclose(u_k, u.as_complex() ** k))


if __name__ == '__main__':
    unittest.main()
