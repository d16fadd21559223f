"""Unit tests for Herz-Schur matrices, the ucp check and Bochner transforms."""

import random
import unittest
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from arithmetic.scalars import I, ExactScalar
from groups import NotAbelianError, build_group, cyclic, regular_representation, symmetric
from multipliers import (
    apply_fourier,
    apply_schur,
    bochner_measure,
    check_ucp,
    fourier_transform,
    herz_schur_matrix,
    make_group_function,
    measure_from_weights,
    parse_group_function,
    parse_scalar,
    plancherel_trace,
    roundtrip_error,
)
from pipeline import s3_constants


# Every supported group of order at most 24 with at most one symmetric factor
SMALL_GROUPS = (
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z13", "Z16", "Z24",
    "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z2xZ6", "Z2xZ2xZ3", "Z3xZ6", "Z4xZ4",
    "S3", "Z2xS3", "Z3xS3", "Z4xS3", "S4",
)

class TestHerzSchurMatrix(unittest.TestCase):
    """A[s][t] = u(s t^-1)."""

    def test_z2(self):
        g = cyclic(2)
        a = herz_schur_matrix(g, make_group_function(g, [1, Fraction(1, 3)]))
        self.assertEqual(a.matrix.tolist(), [[1, Fraction(1, 3)], [Fraction(1, 3), 1]])
        self.assertTrue(a.exact)

    def test_s3_entries(self):
        g = symmetric(3)
        values = [ExactScalar.from_rational(k + 1) for k in range(6)]
        a = herz_schur_matrix(g, make_group_function(g, values)).matrix
        for s in range(6):
            for t in range(6):
                self.assertEqual(a[s, t], values[g.multiply(s, g.inverse(t))])
        # Diagonal is u(e); s t^-1 for s = (123), t = (12) is (31)
        self.assertEqual(a[0, 0], 1)
        self.assertEqual(a[1, 3], values[5])

    def test_schur_action_on_regular_representation(self):
        g = symmetric(3)
        u = make_group_function(g, [1, I, -I, 2, 3, Fraction(1, 2)])
        a = herz_schur_matrix(g, u)
        for t in range(g.order):
            image = apply_schur(a, regular_representation(g, t))
            expected = regular_representation(g, t).astype(object) * u(t)
            self.assertTrue(all(x == y for x, y in zip(image.flat, expected.flat)))

    def test_schur_action_on_all_small_groups(self):
        rng = np.random.default_rng(71)
        for spec in SMALL_GROUPS:
            g = build_group(spec)
            values = rng.normal(size=g.order) + 1j * rng.normal(size=g.order)
            a = herz_schur_matrix(g, make_group_function(g, list(values)))
            for t in range(g.order):
                lam = regular_representation(g, t)
                self.assertTrue(np.allclose(apply_schur(a, lam), values[t] * lam), f"{spec} t={t}")

    def test_shape_mismatch(self):
        g = cyclic(3)
        a = herz_schur_matrix(g, make_group_function(g, [1, 0, 0]))
        with self.assertRaises(ValueError):
            apply_schur(a, np.eye(2))


class TestCheckUcp(unittest.TestCase):
    """Unital complete positivity."""

    def test_constant_one(self):
        g = symmetric(3)
        report = check_ucp(g, make_group_function(g, [1] * 6))
        self.assertTrue(report.ucp)
        self.assertAlmostEqual(report.eigenvalues[0], 6.0)

    def test_indicator_of_identity(self):
        g = build_group("Z2xZ3")
        report = check_ucp(g, make_group_function(g, [1] + [0] * 5))
        self.assertTrue(report.ucp)
        self.assertAlmostEqual(report.min_eigenvalue, 1.0)

    def test_not_positive(self):
        g = cyclic(2)
        report = check_ucp(g, make_group_function(g, [1, 2]))
        self.assertFalse(report.positive_definite)
        self.assertAlmostEqual(report.min_eigenvalue, -1.0)

    def test_not_unital(self):
        g = cyclic(2)
        report = check_ucp(g, make_group_function(g, [2, 1]))
        self.assertTrue(report.positive_definite)
        self.assertFalse(report.unital)
        self.assertFalse(report.ucp)

    def test_non_hermitian(self):
        g = cyclic(3)
        report = check_ucp(g, make_group_function(g, [1, Fraction(1, 2), 0]))
        self.assertFalse(report.hermitian)
        self.assertFalse(report.positive_definite)
        self.assertEqual(report.reason, "non-Hermitian")


class TestFourierMultiplier(unittest.TestCase):
    """M_u on coefficient vectors and the Plancherel trace."""

    def test_powers(self):
        g = cyclic(4)
        u = make_group_function(g, [1, Fraction(1, 2), 0, Fraction(1, 2)])
        out = apply_fourier(u, [1, 1, 1, 1], 3)
        self.assertEqual(out, [1, Fraction(1, 8), 0, Fraction(1, 8)])
        self.assertEqual(apply_fourier(u, [5, 6, 7, 8], 0), [5, 6, 7, 8])
        with self.assertRaises(ValueError):
            apply_fourier(u, [1, 1, 1, 1], -1)

    def test_semigroup_law(self):
        rng = random.Random(73)
        g = symmetric(3)
        for _ in range(5):
            values = [ExactScalar.from_rational(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
                      + I * Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(6)]
            u = make_group_function(g, values)
            coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(6)]
            for k1 in range(4):
                for k2 in range(4):
                    twice = apply_fourier(u, apply_fourier(u, coeffs, k1), k2)
                    self.assertEqual(twice, apply_fourier(u, coeffs, k1 + k2), f"k1={k1} k2={k2}")

    def test_semigroup_law_float(self):
        rng = np.random.default_rng(79)
        g = build_group("Z2xZ3")
        u = make_group_function(g, list(rng.uniform(-1, 1, size=6) + 1j * rng.uniform(-1, 1, size=6)))
        coeffs = list(rng.normal(size=6) + 1j * rng.normal(size=6))
        for k1 in range(4):
            for k2 in range(4):
                twice = apply_fourier(u, apply_fourier(u, coeffs, k1), k2)
                self.assertTrue(np.allclose(twice, apply_fourier(u, coeffs, k1 + k2), rtol=1e-12, atol=1e-14))

    def test_s3_multiplier_on_transposition(self):
        g = symmetric(3)
        u = make_group_function(g, list(s3_constants()))
        delta = [0] * 6
        delta[g.index("(12)")] = 1
        out = apply_fourier(u, delta, 2)
        self.assertEqual(out[g.index("(12)")], Fraction(2, 9))
        self.assertTrue(all(v == 0 for i, v in enumerate(out) if i != g.index("(12)")))

    def test_trace_preserving(self):
        g = symmetric(3)
        u = make_group_function(g, [1, I, -I, 0, 0, 0])
        coeffs = [Fraction(k, 7) for k in range(1, 7)]
        for k in range(4):
            self.assertEqual(plancherel_trace(g, apply_fourier(u, coeffs, k)), plancherel_trace(g, coeffs))


class TestBochner(unittest.TestCase):
    """Bochner transform on finite abelian groups."""

    def test_random_probability_measures_round_trip(self):
        rng = np.random.default_rng(7)
        for trial in range(200):
            n = int(rng.integers(2, 13))
            g = cyclic(n)
            weights = rng.random(n)
            weights /= weights.sum()
            u = fourier_transform(measure_from_weights(g, list(weights)))
            self.assertTrue(check_ucp(g, u).ucp, f"trial {trial}")
            recovered = bochner_measure(g, u)
            self.assertLess(float(np.max(np.abs(recovered.weights - weights))), 1e-12)
            self.assertLess(roundtrip_error(u, recovered), 1e-12)

    def test_signed_measures_are_rejected(self):
        rng = np.random.default_rng(11)
        for trial in range(200):
            n = int(rng.integers(2, 13))
            g = cyclic(n)
            weights = rng.random(n)
            weights /= weights.sum()
            weights[int(rng.integers(n))] = -float(rng.uniform(1e-3, 0.5))
            u = fourier_transform(measure_from_weights(g, list(weights)))
            self.assertFalse(check_ucp(g, u).positive_definite, f"trial {trial}")

    def test_exact_z4_example(self):
        g = cyclic(4)
        half_i = I / 2
        u = make_group_function(g, [1, half_i, 0, -half_i])
        measure = bochner_measure(g, u)
        self.assertEqual(measure.exact_weights,
                         [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4), 0])
        self.assertTrue(measure.is_probability())
        self.assertEqual(fourier_transform(measure).values, u.values)

    def test_klein_group(self):
        g = build_group("Z2xZ2")
        u = make_group_function(g, [1, 0, 0, 0])
        measure = bochner_measure(g, u)
        self.assertEqual(measure.exact_weights, [Fraction(1, 4)] * 4)

    def test_non_abelian(self):
        g = symmetric(3)
        with self.assertRaises(NotAbelianError):
            bochner_measure(g, make_group_function(g, [1] * 6))


class TestParsing(unittest.TestCase):
    """JSON forms of u."""

    def test_scalar_forms(self):
        self.assertEqual(parse_scalar(2), 2)
        self.assertEqual(parse_scalar("1/3"), Fraction(1, 3))
        self.assertEqual(parse_scalar([0, 1]), I)
        self.assertEqual(parse_scalar({"re": "0", "im": "1/2"}), I / 2)
        self.assertEqual(parse_scalar([0.0, 0.5]), 0.5j)
        self.assertEqual(parse_scalar(0.25), 0.25 + 0j)
        for bad in (True, "x", [1, 2, 3], None):
            with self.assertRaises(ValueError):
                parse_scalar(bad)

    def test_group_function(self):
        g = symmetric(3)
        u = parse_group_function(g, {"group": "S3", "values": [1, 0, 0, 0, 0, 0]})
        self.assertTrue(u.exact)
        self.assertTrue(u.is_unital())
        with self.assertRaises(ValueError):
            parse_group_function(g, {"group": "Z6", "values": [1] * 6})
        with self.assertRaises(ValueError):
            parse_group_function(g, "1, 0")

    def test_float_values_stay_float(self):
        g = cyclic(2)
        u = parse_group_function(g, [1, 0.5])
        self.assertFalse(u.exact)
        self.assertTrue(u.is_symmetric())


if __name__ == '__main__':
    unittest.main()
