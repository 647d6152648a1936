#!/usr/bin/env python3

import unittest

import numpy as np

from sapphire.cohomology.errors import AugmentationNonzero
from sapphire.cohomology.group import GroupParams, SapphireGroup, A1, B1, A2
from sapphire.cohomology.group_ring import (GroupRingElement, fox_gradient, fox_derivative,
                                            fox_power, fox_decompose, recombine)


class GroupRingTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.group = SapphireGroup(GroupParams(1, 2, -1, -1))

    def ring(self, text: str) -> GroupRingElement:
        return GroupRingElement.parse(self.group, text)

    def test_parse_and_render(self):
        e = self.ring("2*a1*y^-1 - 1")
        self.assertEqual("-1 + 2*a1*y^-1", str(e))
        self.assertEqual(e, self.ring(str(e)))
        self.assertEqual(self.ring("1 - b1^-1"),
                         GroupRingElement.one(self.group)
                         - GroupRingElement.monomial(self.group, self.group.parse("b1^-1")))
        self.assertEqual("0", str(GroupRingElement.zero(self.group)))
        self.assertEqual(self.ring("3"), 3)

        with self.assertRaises(ValueError):
            self.ring("")

        with self.assertRaises(ValueError):
            self.ring("a1 + c2")

    def test_arithmetic(self):
        a1 = self.ring("a1")
        self.assertEqual(self.ring("x - 1"), (a1 - 1) * (a1 + 1))
        self.assertEqual(self.ring("2*a1 + 2"), 2 * (a1 + 1))
        self.assertEqual(self.ring("a1*b1"), a1 * self.group.generator(B1))
        self.assertEqual(0, a1 - a1)
        self.assertFalse(a1 - a1)
        self.assertEqual(self.ring("1 - a1"), 1 - a1)
        self.assertEqual(1, GroupRingElement.one(self.group))
        self.assertEqual(2, len(a1 + 1))

        other = SapphireGroup(GroupParams(1, 1, -2, -1))
        with self.assertRaises(ValueError):
            a1 + GroupRingElement.one(other)

        with self.assertRaises(TypeError):
            a1 * "a1"

    def test_terms(self):
        e = self.ring("a2 + 3*b1 - 1 + a2")
        self.assertEqual(2, e.coefficient(self.group.generator(A2)))
        self.assertEqual(0, e.coefficient(self.group.generator(A1)))
        self.assertEqual(4, e.augmentation())
        self.assertListEqual([self.group.identity, self.group.generator(B1),
                              self.group.generator(A2)],
                             [g for g, _ in e.terms])

    def test_antipode(self):
        self.assertEqual(self.ring("a2^-1 - 2*y"), self.ring("a2 - 2*y^-1").antipode())
        e = self.ring("a1*b1 + 3*v - x")
        self.assertEqual(e, e.antipode().antipode())

    def test_fox_fundamental_identity(self):
        group = self.group
        units = {gen: GroupRingElement.monomial(group, group.generator(gen)) - 1
                 for gen in (A1, B1, A2)}
        for length in range(4):
            for word in group.iter_words(length):
                gradient = fox_gradient(group, word)
                total = GroupRingElement.zero(group)
                for gen, unit in units.items():
                    total = total + gradient[gen] * unit
                expected = GroupRingElement.monomial(group, group.evaluate(word)) - 1
                self.assertEqual(expected, total, word)

    def test_antipode_reverses_products(self):
        rng = np.random.default_rng(9)
        for _ in range(40):
            a, b = (GroupRingElement(self.group,
                                     [(self.group.random_element(rng, 8), int(rng.integers(-3, 4)))
                                      for _ in range(3)])
                    for _ in range(2))
            self.assertEqual(b.antipode() * a.antipode(), (a * b).antipode())
            self.assertEqual(a.antipode() + b.antipode(), (a + b).antipode())

    def test_fox_power(self):
        for gen in (A1, B1, A2):
            g = GroupRingElement.monomial(self.group, self.group.generator(gen))
            for n in range(-4, 5):
                gn = GroupRingElement.monomial(self.group,
                                               self.group.power(self.group.generator(gen), n))
                self.assertEqual(gn - 1, fox_power(self.group, gen, n) * (g - 1))
        self.assertEqual(self.ring("1 + a1 + x"), fox_power(self.group, A1, 3))
        self.assertEqual(0, fox_power(self.group, B1, 0))
        self.assertEqual(self.ring("-b1^-1 - b1^-2"), fox_power(self.group, B1, -2))

    def test_fox_derivative(self):
        word = ((A1, 1), (B1, 1), (A1, -1), (B1, 1))
        self.assertEqual(self.ring("1 - b1^-1"), fox_derivative(self.group, word, A1))
        self.assertEqual(self.ring("a1 + b1^-1"), fox_derivative(self.group, word, B1))
        self.assertEqual(0, fox_derivative(self.group, word, A2))
        gradient = fox_gradient(self.group, ((A2, 2),))
        self.assertEqual(self.ring("1 + a2"), gradient[A2])

        with self.assertRaises(ValueError):
            fox_derivative(self.group, word, "y")

    def test_fox_decompose(self):
        a, b, c = fox_decompose(self.ring("a2^-1 - 1"))
        self.assertEqual(0, a)
        self.assertEqual(0, b)
        self.assertEqual(self.ring("-a2^-1"), c)

        with self.assertRaises(AugmentationNonzero):
            fox_decompose(self.ring("a1 + b1"))

        rng = np.random.default_rng(3)
        for _ in range(50):
            terms = [(self.group.random_element(rng, 10), int(rng.integers(-3, 4)))
                     for _ in range(3)]
            e = GroupRingElement(self.group, terms)
            e = e - e.augmentation()
            self.assertEqual(e, recombine(fox_decompose(e)))


def suite():
    """Get Test suite object
    """
    return unittest.TestLoader().loadTestsFromTestCase(GroupRingTestCase)


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
