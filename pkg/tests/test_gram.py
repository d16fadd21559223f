"""Unit tests for the Jacobi eigensolver, Gram decompositions and rank."""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from arithmetic.scalars import I, SQRT2, SQRT3, ExactScalar
from linalg import (
    ConvergenceError,
    GramDecomposition,
    NotHermitianError,
    NotPositiveSemidefiniteError,
    apply_kraus,
    characteristic_polynomial,
    exact_determinant,
    exact_rank,
    float_rank,
    gram_vectors,
    hadamard_family,
    hadamard_rows,
    hermitian_eigen,
    kraus_operators,
    rank,
    reconstruct,
)
from multipliers import apply_schur


def random_psd(rng: np.random.Generator, n: int, r: int) -> np.ndarray:
    b = rng.normal(size=(n, r)) + 1j * rng.normal(size=(n, r))
    return b @ b.conj().T


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class TestHermitianEigen(unittest.TestCase):
    """Cyclic Jacobi diagonalization."""

    def test_known_spectrum(self):
        result = hermitian_eigen([[2, 1j], [-1j, 2]])
        self.assertTrue(np.allclose(result.eigenvalues, [3.0, 1.0], atol=1e-14))
        self.assertLess(result.residual, 1e-13)

    def test_random_matrices(self):
        rng = np.random.default_rng(3)
        for n in (1, 2, 5, 12, 30):
            h = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            h = h + h.conj().T
            result = hermitian_eigen(h)
            self.assertTrue(np.all(np.diff(result.eigenvalues) <= 0))
            self.assertTrue(np.allclose(result.eigenvalues, np.sort(np.linalg.eigvalsh(h))[::-1], atol=1e-10))
            v = result.eigenvectors
            self.assertTrue(np.allclose(v.conj().T @ v, np.eye(n), atol=1e-12))
            self.assertLess(result.residual, 1e-10 * max(1.0, np.linalg.norm(h)))

    def test_bit_identical_repeats(self):
        rng = np.random.default_rng(5)
        h = random_psd(rng, 8, 8)
        first = hermitian_eigen(h)
        for _ in range(5):
            again = hermitian_eigen(h.copy())
            self.assertEqual(first.eigenvalues.tobytes(), again.eigenvalues.tobytes())
            self.assertEqual(first.eigenvectors.tobytes(), again.eigenvectors.tobytes())

    def test_phase_normalization(self):
        result = hermitian_eigen(random_psd(np.random.default_rng(9), 4, 4))
        for k in range(4):
            column = result.eigenvectors[:, k]
            first = column[np.argmax(np.abs(column) > 1e-12 * np.max(np.abs(column)))]
            self.assertAlmostEqual(first.imag, 0.0, places=14)
            self.assertGreater(first.real, 0.0)

    def test_exact_entries(self):
        result = hermitian_eigen([[ExactScalar.one(), SQRT2], [SQRT2, ExactScalar.from_rational(2)]])
        self.assertTrue(np.allclose(result.eigenvalues, [3.0, 0.0], atol=1e-14))

    def test_not_hermitian(self):
        with self.assertRaises(NotHermitianError):
            hermitian_eigen([[1, 2], [0, 1]])
        with self.assertRaises(ValueError):
            hermitian_eigen([[1, 2, 3]])

    def test_sweep_limit(self):
        h = random_psd(np.random.default_rng(1), 6, 6)
        with self.assertRaises(ConvergenceError):
            hermitian_eigen(h, max_sweeps=1)


class TestGramVectors(unittest.TestCase):
    """A = sum_k conj(phi(k)) (x) phi(k)."""

    def test_reconstruction(self):
        rng = np.random.default_rng(17)
        for n, r in ((3, 1), (6, 2), (10, 4), (16, 16)):
            a = random_psd(rng, n, r)
            dec = gram_vectors(a)
            self.assertEqual(dec.d, r)
            self.assertLess(np.linalg.norm(dec.reconstruct() - a), 1e-10 * np.linalg.norm(a))
            self.assertLess(dec.reconstruction_error, 1e-10 * np.linalg.norm(a))

    def test_orientation(self):
        phi = np.array([1.0, 1j, 0.5])
        dec = gram_vectors(np.outer(np.conj(phi), phi))
        self.assertEqual(dec.d, 1)
        # phi is recovered up to a unimodular factor
        ratio = dec.vectors[0] / phi
        self.assertTrue(np.allclose(ratio, ratio[0]))
        self.assertAlmostEqual(abs(ratio[0]), 1.0)

    def test_not_psd(self):
        with self.assertRaises(NotPositiveSemidefiniteError):
            gram_vectors(np.array([[1.0, 2.0], [2.0, 1.0]]))

    def test_zero_matrix(self):
        self.assertEqual(gram_vectors(np.zeros((3, 3))).d, 0)

    def test_kraus_realizes_schur_multiplier(self):
        rng = np.random.default_rng(23)
        for n, r in ((4, 2), (6, 3), (9, 9)):
            a = random_psd(rng, n, r)
            ops = kraus_operators(gram_vectors(a))
            self.assertEqual(len(ops), r)
            x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            diff = apply_kraus(ops, x) - apply_schur(a, x)
            self.assertLess(np.linalg.norm(diff), 1e-10 * np.linalg.norm(x) * np.linalg.norm(a))


class TestHadamardFamily(unittest.TestCase):
    """Products conj(phi(k)) o phi(l)."""

    def test_shape_and_rows(self):
        vectors = np.array([[1.0, 2.0, 1j], [0.0, 1.0, 1.0]])
        dec = GramDecomposition(2, vectors, None, 0.0)
        family = hadamard_family(dec)
        self.assertEqual(family.shape, (4, 3))
        self.assertTrue(np.allclose(family[1], np.conj(vectors[0]) * vectors[1]))
        self.assertTrue(np.allclose(family, np.array(hadamard_rows(vectors))))

    def test_exact_rows(self):
        rows = hadamard_rows([[I, SQRT3], [ExactScalar.one(), I]])
        self.assertEqual(rows[0], [1, 3])
        self.assertEqual(rows[1], [-I, SQRT3 * I])

    def test_rank_invariant_under_unitary_mixing(self):
        rng = np.random.default_rng(29)
        a = random_psd(rng, 6, 3)
        dec = gram_vectors(a)
        base_rank = float_rank(hadamard_family(dec))
        for _ in range(50):
            u = random_unitary(rng, dec.d)
            mixed = u @ dec.vectors
            self.assertTrue(np.allclose(reconstruct(mixed), a, atol=1e-9))
            mixed_dec = GramDecomposition(dec.d, mixed, dec.eigen, 0.0)
            self.assertEqual(float_rank(hadamard_family(mixed_dec)), base_rank)


class TestRank(unittest.TestCase):
    """Exact and float rank, determinants and characteristic polynomials."""

    def test_exact_rank(self):
        self.assertEqual(exact_rank([[1, 2], [2, 4]]), 1)
        self.assertEqual(exact_rank([[1, SQRT2], [SQRT2, 2]]), 1)
        self.assertEqual(exact_rank([[1, SQRT2], [SQRT3, 2]]), 2)
        self.assertEqual(exact_rank([[0, 0, 1], [0, 0, 2], [1, 0, 0]]), 2)
        self.assertEqual(exact_rank([]), 0)
        self.assertEqual(rank([[I, 1], [1, -I]], mode="exact"), 1)

    def test_exact_rank_rejects_floats(self):
        with self.assertRaises(TypeError):
            exact_rank([[1.0, 2.0]])

    def test_determinant(self):
        self.assertEqual(exact_determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(exact_determinant([[2, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 6)]]), 1)
        self.assertEqual(exact_determinant([[SQRT2, 1], [1, SQRT2]]), 1)
        self.assertEqual(exact_determinant([[1, 2], [2, 4]]), 0)
        with self.assertRaises(ValueError):
            exact_determinant([[1, 2]])

    def test_float_rank(self):
        self.assertEqual(float_rank(np.outer([1, 2, 3], [1, 1j, 0])), 1)
        self.assertEqual(float_rank(np.eye(4)), 4)
        self.assertEqual(float_rank(np.zeros((2, 2))), 0)
        with self.assertRaises(ValueError):
            rank(np.eye(2), mode="symbolic")

    def test_characteristic_polynomial(self):
        coeffs = characteristic_polynomial([[1, SQRT2], [SQRT2, 2]])
        self.assertEqual(coeffs, [1, -3, 0])
        coeffs = characteristic_polynomial([[0, 1], [-1, 0]])
        self.assertEqual(coeffs, [1, 0, 1])


if __name__ == '__main__':
    unittest.main()
