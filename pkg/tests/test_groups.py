"""Unit tests for finite groups, the integer group and dual groups."""

import unittest
import sys
from pathlib import Path

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from arithmetic.scalars import J
from groups import (
    IntegerGroup,
    NotAbelianError,
    UnsupportedGroupError,
    all_regular_matrices,
    build_group,
    cyclic,
    dual_group,
    parse_group,
    product,
    regular_representation,
    symmetric,
)


class TestBuilders(unittest.TestCase):
    """Cayley tables built from specs."""

    def test_trivial_group(self):
        g = cyclic(1)
        self.assertEqual(g.cayley, ((0,),))
        self.assertEqual(g.order, 1)

    def test_klein_four_group(self):
        g = product(cyclic(2), cyclic(2))
        self.assertEqual(g.order, 4)
        self.assertEqual(g.name, "Z2xZ2")
        for x in range(4):
            self.assertEqual(g.multiply(x, x), g.identity)
            self.assertEqual(g.inverse(x), x)
        self.assertTrue(g.is_abelian())

    def test_s3_enumeration(self):
        g = symmetric(3)
        self.assertEqual(g.elements, ("1", "(123)", "(132)", "(12)", "(23)", "(31)"))
        # (123)(12) = (31) with right-to-left composition
        self.assertEqual(g.multiply(g.index("(123)"), g.index("(12)")), g.index("(31)"))
        self.assertEqual(g.multiply(g.index("(12)"), g.index("(123)")), g.index("(23)"))
        self.assertEqual(g.inverse(g.index("(123)")), g.index("(132)"))
        self.assertFalse(g.is_abelian())
        self.assertEqual(g.exponent(), 6)

    def test_associativity(self):
        for spec in ("Z5", "S3", "Z2xS3", "S4"):
            self.assertTrue(build_group(spec).check_associativity(), spec)

    def test_symmetric_orders(self):
        self.assertEqual(symmetric(4).order, 24)
        self.assertEqual(symmetric(5).order, 120)
        self.assertEqual(symmetric(2).factors, (2,))

    def test_tuple_specs(self):
        g = build_group(("product", ("cyclic", 2), ("symmetric", 3)))
        self.assertEqual(g.order, 12)
        self.assertIsNone(g.factors)
        self.assertEqual(build_group(("cyclic", 6)).factors, (6,))

    def test_unsupported_specs(self):
        for spec in ("A5", "Z0", "S6", "", "Zx", ("dihedral", 4)):
            with self.assertRaises(UnsupportedGroupError, msg=repr(spec)):
                build_group(spec)

    def test_order_limit(self):
        with self.assertRaises(UnsupportedGroupError):
            cyclic(10 ** 6)

    def test_label_lookup(self):
        g = symmetric(3)
        with self.assertRaises(KeyError):
            g.index("(13)")


class TestRegularRepresentation(unittest.TestCase):
    """Left regular representation matrices."""

    def test_cyclic_shift_cubed_is_identity(self):
        g = cyclic(3)
        shift = regular_representation(g, 1)
        self.assertTrue(np.array_equal(shift @ shift @ shift, np.eye(3, dtype=np.int64)))

    def test_homomorphism(self):
        g = symmetric(3)
        mats = all_regular_matrices(g)
        for s in range(g.order):
            for t in range(g.order):
                self.assertTrue(np.array_equal(mats[s] @ mats[t], mats[g.multiply(s, t)]))

    def test_permutation_matrices(self):
        for m in all_regular_matrices(build_group("Z2xZ3")):
            self.assertTrue(np.array_equal(m.sum(axis=0), np.ones(6)))
            self.assertTrue(np.array_equal(m.T @ m, np.eye(6, dtype=np.int64)))

    def test_invalid_element(self):
        with self.assertRaises(ValueError):
            regular_representation(cyclic(3), 3)


class TestIntegerGroup(unittest.TestCase):
    """The integer group used through windows."""

    def test_parse(self):
        z = parse_group("Z")
        self.assertIsInstance(z, IntegerGroup)
        self.assertFalse(z.is_finite())
        self.assertTrue(z.is_abelian())

    def test_law(self):
        z = IntegerGroup()
        self.assertEqual(z.multiply(3, -5), -2)
        self.assertEqual(z.inverse(7), -7)
        self.assertTrue(z.contains(-4))
        self.assertFalse(z.contains(2 ** 40))
        self.assertFalse(z.contains(1.5))


class TestDualGroup(unittest.TestCase):
    """Character tables of finite abelian groups."""

    def test_z2(self):
        dual = dual_group(cyclic(2))
        self.assertTrue(np.array_equal(dual.characters, np.array([[1, 1], [1, -1]], dtype=complex)))

    def test_orthonormality(self):
        for spec in ("Z3", "Z4", "Z2xZ2", "Z6", "Z5", "Z2xZ3"):
            dual = dual_group(build_group(spec))
            n = dual.order
            gram = dual.characters @ dual.characters.conj().T / n
            self.assertTrue(np.allclose(gram, np.eye(n), atol=1e-14), spec)

    def test_characters_are_homomorphisms(self):
        for spec in ("Z4", "Z2xZ2", "Z2xZ3"):
            g = build_group(spec)
            chars = dual_group(g).characters
            for s in range(g.order):
                for t in range(g.order):
                    self.assertTrue(np.allclose(chars[:, g.multiply(s, t)], chars[:, s] * chars[:, t]))

    def test_dual_law_follows_base(self):
        g = build_group("Z2xZ3")
        dual = dual_group(g)
        for k in range(g.order):
            for l in range(g.order):
                self.assertTrue(np.allclose(dual.character(k) * dual.character(l),
                                            dual.character(dual.multiply(k, l))))

    def test_klein_characters_are_real_signs(self):
        chars = dual_group(build_group("Z2xZ2")).characters
        self.assertTrue(np.all(np.isin(chars, [1, -1])))

    def test_exact_characters(self):
        dual = dual_group(cyclic(3))
        table = dual.exact_characters()
        self.assertEqual(table[1][1], J)
        self.assertEqual(table[2][1], J * J)
        with self.assertRaises(ValueError):
            dual_group(cyclic(5)).exact_characters()

    def test_not_abelian(self):
        with self.assertRaises(NotAbelianError):
            dual_group(symmetric(3))


if __name__ == '__main__':
    unittest.main()
