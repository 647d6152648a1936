#!/usr/bin/env python3

import unittest
from sapphire.cohomology.utils import parse_ints, split_arguments, power, signed_sum, chunk


class UtilsTestCase(unittest.TestCase):
    def test_parse_ints(self):
        self.assertTupleEqual((1, 2, -1, -1), parse_ints("1,2,-1,-1"))
        self.assertTupleEqual((1, 2, -1, -1), parse_ints(" 1, 2 ,-1, -1 ", count=4))
        self.assertTupleEqual((5,), parse_ints("5", count=1))

        with self.assertRaises(ValueError):
            parse_ints("1,2,x,4")

        with self.assertRaises(ValueError):
            parse_ints("1,2,3", count=4)

    def test_split_arguments(self):
        self.assertListEqual(["Z", "Zp:5"], split_arguments("Z, Zp:5"))
        self.assertListEqual(["Zp:5", "tensor(Z,Zp:3)"],
                             split_arguments("Zp:5,tensor(Z,Zp:3)"))
        self.assertListEqual(["Zeta:1", "1", "-1"], split_arguments("Zeta:1,1,-1"))

        with self.assertRaises(ValueError):
            split_arguments("tensor(Z,Z")

        with self.assertRaises(ValueError):
            split_arguments("Z),(Z")

    def test_power(self):
        self.assertEqual("", power("x", 0))
        self.assertEqual("x", power("x", 1))
        self.assertEqual("y^-2", power("y", -2))

    def test_signed_sum(self):
        self.assertEqual("0", signed_sum([]))
        self.assertEqual("0", signed_sum([(0, "a1")]))
        self.assertEqual("2*a1 - 1", signed_sum([(2, "a1"), (-1, "1")]))
        self.assertEqual("-b1 + 3", signed_sum([(-1, "b1"), (3, "")]))
        self.assertEqual("rho1* - 2*rho3*", signed_sum([(1, "rho1*"), (0, "rho2*"), (-2, "rho3*")]))

    def test_chunk(self):
        self.assertListEqual([(1, 2), (3, 4)], list(chunk((1, 2, 3, 4), 2)))
        self.assertListEqual([], list(chunk((), 3)))

        with self.assertRaises(ValueError):
            list(chunk((1, 2, 3), 2))

        with self.assertRaises(ValueError):
            list(chunk((1, 2), 0))


def suite():
    """Get Test suite object
    """
    return unittest.TestLoader().loadTestsFromTestCase(UtilsTestCase)


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
