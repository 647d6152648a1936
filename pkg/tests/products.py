#!/usr/bin/env python3

import unittest

from sapphire.cohomology.coefficients import module_trivial_Z, module_character, module_Zp, tensor
from sapphire.cohomology.errors import DimensionMismatch, NotACocycle
from sapphire.cohomology.group import GroupParams, ETA1, ETA2, ETA3
from sapphire.cohomology.homology import CohomologyClass
from sapphire.cohomology.products import (ProductCalculator, ProductEntry, generator_id,
                                          product_table)
from sapphire.cohomology.resolution import Resolution


class CupProductTestCase(unittest.TestCase):
    """Products over Z twisted by eta3 for (r,s,t,u) = (1,1,-2,-1)"""

    @classmethod
    def setUpClass(cls) -> None:
        cls.params = GroupParams(1, 1, -2, -1)
        cls.calc = ProductCalculator(Resolution(cls.params))
        cls.eta3 = module_character(ETA3, cls.params)
        cls.target = tensor(cls.eta3, cls.eta3)

    def cls_of(self, degree, cocycle):
        return self.calc.cohomology_group(self.eta3, degree).class_of(cocycle)

    def test_squares(self):
        h2 = self.calc.cohomology_group(self.target, 2)
        alpha2 = self.cls_of(1, (0, 0, 1))
        alpha12 = self.cls_of(1, (1, 0, 1))
        u, t = self.params.u, self.params.t
        self.assertEqual(self.target, module_trivial_Z())
        self.assertTrue(h2.equal((2, 0, 2 * u), self.calc.cup_11(alpha2, alpha2).cocycle))
        self.assertTrue(h2.equal((2, 0, 2 * u), self.calc.cup_11(alpha2, alpha12).cocycle))
        self.assertTrue(h2.equal((0, 0, 2 * t), self.calc.cup_11(alpha12, alpha12).cocycle))
        self.assertTrue(h2.is_zero((2, 1, 2 * u)))
        self.assertFalse(self.calc.cup_11(alpha2, alpha2).is_zero)

    def test_graded_commutativity(self):
        gens = self.calc.cohomology_group(self.eta3, 1).generators
        for x in gens:
            for y in gens:
                direct = self.calc.cup_11(x, y)
                swapped = self.calc.swap(self.calc.cup_11(y, x), self.eta3, self.eta3, sign=-1)
                self.assertTupleEqual(direct.coordinates, swapped.coordinates)
            square = self.calc.cup_11(x, x)
            h2 = self.calc.cohomology_group(self.target, 2)
            self.assertTrue(h2.is_zero(tuple(2 * c for c in square.cocycle)))

    def test_degree_three(self):
        h3 = self.calc.cohomology_group(self.target, 3)
        alpha2 = self.cls_of(1, (0, 0, 1))
        alpha12 = self.cls_of(1, (1, 0, 1))
        rho13 = self.cls_of(2, (1, 0, 1))
        rho2 = self.cls_of(2, (0, 1, 0))
        for left, right in ((alpha12, rho13), (alpha12, rho2), (alpha2, rho2)):
            self.assertTrue(self.calc.cup_12(left, right).is_zero)
        top = self.calc.cup_12(alpha2, rho13)
        self.assertTrue(h3.generates([top.cocycle]))
        self.assertTrue(h3.generates([self.calc.cup_21(rho13, alpha2).cocycle]))

    def test_errors(self):
        alpha2 = self.cls_of(1, (0, 0, 1))
        rho2 = self.cls_of(2, (0, 1, 0))
        with self.assertRaises(DimensionMismatch):
            self.calc.cup_11(alpha2, rho2)

        with self.assertRaises(DimensionMismatch):
            self.calc.cup_12(rho2, alpha2)

        with self.assertRaises(DimensionMismatch):
            self.calc.cup_21(alpha2, rho2)

        with self.assertRaises(DimensionMismatch):
            self.calc.cap_with_zeta(1, alpha2)

        z = module_trivial_Z()
        open_cochain = CohomologyClass(1, z, (1, 0, 0), ())
        closed = self.calc.cohomology_group(z, 1)
        with self.assertRaises(NotACocycle):
            self.calc.cup_11(open_cochain, open_cochain)
        self.assertListEqual([], closed.generators)

    def test_cap_with_fundamental_cycle(self):
        for degree in (2, 3):
            lower = self.calc.homology_group(self.eta3, 3 - degree)
            images = [self.calc.cap_with_zeta(degree, g)
                      for g in self.calc.cohomology_group(self.eta3, degree).generators]
            self.assertTrue(all(lower.is_cycle(c) for c in images))
            self.assertTrue(lower.generates(images))


class TwistedProductTestCase(unittest.TestCase):
    """Products of Z twisted by eta1 with Z twisted by eta2"""

    @classmethod
    def setUpClass(cls) -> None:
        cls.params = GroupParams(1, 1, -2, -1)
        cls.calc = ProductCalculator(Resolution(cls.params))
        cls.eta1 = module_character(ETA1, cls.params)
        cls.eta2 = module_character(ETA2, cls.params)
        cls.table = cls.calc.product_table(cls.eta1, cls.eta2)

    def test_degree_two_products_vanish(self):
        degree_two = [e for e in self.table.entries if e.bidegree == (1, 1)]
        self.assertTrue(degree_two)
        self.assertTrue(all(e.is_zero for e in degree_two))

    def test_cap(self):
        alpha2 = self.calc.cohomology_group(self.eta1, 1).class_of((0, 0, 1))
        capped = self.calc.cap_11(alpha2, (0, 1, 0), self.eta2)
        target = tensor(self.eta1, self.eta2)
        self.assertTrue(self.calc.homology_group(target, 0).is_zero(capped))
        h1 = self.calc.homology_group(self.eta2, 1)
        self.assertTrue(h1.generates([(0, 0, 1)]))
        self.assertEqual(2, h1.order_of((0, 1, 0)))

    def test_degree_three_product(self):
        degree_three = [e for e in self.table.entries if e.bidegree == (1, 2)]
        self.assertTrue(any(not e.is_zero for e in degree_three))
        self.assertTrue(self.table.nonzero)

    def test_table(self):
        self.assertEqual(self.params, self.table.params)
        entry = self.table.entries[0]
        self.assertIs(entry, self.table.lookup(entry.bidegree, entry.left, entry.right))
        self.assertDictEqual({"bidegree": list(entry.bidegree), "left": entry.left,
                              "right": entry.right, "result": list(entry.result)},
                             entry.as_dict())

        with self.assertRaises(KeyError):
            self.table.lookup((2, 2), "H2:0", "H2:0")


class ModPProductTestCase(unittest.TestCase):
    def test_ring_structure(self):
        params = GroupParams(1, 1, -5, -4)
        calc = ProductCalculator(Resolution(params))
        zp = module_Zp(5)
        h1 = calc.cohomology_group(zp, 1)
        alpha = h1.class_of((1, 0, params.r))
        self.assertTrue(h1.generates([alpha.cocycle]))
        w = (0, 0, 1)
        self.assertTrue(calc.homology_group(zp, 1).generates([w]))
        capped = calc.cap_11(alpha, w, zp)
        self.assertFalse(calc.homology_group(tensor(zp, zp), 0).is_zero(capped))
        self.assertTrue(calc.cup_11(alpha, alpha).is_zero)
        h3 = calc.cohomology_group(tensor(zp, zp), 3)
        products = [calc.cup_12(alpha, beta) for beta in calc.cohomology_group(zp, 2).generators]
        self.assertTrue(any(h3.generates([p.cocycle]) for p in products))


class ProductTableTestCase(unittest.TestCase):
    def test_empty_table(self):
        table = product_table(Resolution(GroupParams(1, 2, -1, -1)),
                              module_trivial_Z(), module_trivial_Z())
        self.assertListEqual([], table.entries)
        self.assertListEqual([], table.nonzero)

    def test_entry(self):
        self.assertEqual("H2:1", generator_id(2, 1))
        self.assertTrue(ProductEntry((1, 1), "H1:0", "H1:0", (0, 0)).is_zero)
        self.assertFalse(ProductEntry((1, 1), "H1:0", "H1:0", (0, 1)).is_zero)


def suite():
    """Get Test suite object
    """
    loader = unittest.TestLoader()
    return unittest.TestSuite([loader.loadTestsFromTestCase(case)
                               for case in (CupProductTestCase,
                                            TwistedProductTestCase,
                                            ModPProductTestCase,
                                            ProductTableTestCase)])


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
