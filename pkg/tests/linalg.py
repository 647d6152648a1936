#!/usr/bin/env python3

import unittest

import numpy as np

from sapphire.cohomology.errors import NotInSpan
from sapphire.cohomology.linalg import (int_matrix, zeros, identity, column, as_vector, matmul,
                                        kron, hstack, reduce_mod, is_zero, equal,
                                        smith_normal_form, invert, matrix_power, kernel_basis,
                                        image_generators, solve_integer, Subquotient)


class LinalgTestCase(unittest.TestCase):
    def assertSmith(self, m, invariants):
        form = smith_normal_form(m)
        self.assertListEqual(invariants, form.invariants)
        self.assertTrue(equal(form.D, matmul(matmul(form.U, m), form.V)))
        self.assertTrue(equal(identity(m.shape[0]), matmul(form.U, form.Uinv)))
        self.assertTrue(equal(identity(m.shape[1]), matmul(form.V, form.Vinv)))
        for i in range(form.D.shape[0]):
            for j in range(form.D.shape[1]):
                if i != j:
                    self.assertEqual(0, form.D[i, j])
        return form

    def test_constructors(self):
        m = int_matrix([[1, 2], [3, 4]])
        self.assertEqual(object, m.dtype)
        self.assertEqual((0, 3), int_matrix([], shape=(0, 3)).shape)
        self.assertTupleEqual((1, 2, 3), as_vector(column((1, 2, 3))))

        with self.assertRaises(ValueError):
            int_matrix([])

        with self.assertRaises(ValueError):
            int_matrix([[1, 2], [3]])

        with self.assertRaises(ValueError):
            int_matrix([[1, 2]], shape=(2, 1))

    def test_products(self):
        a = int_matrix([[1, 2], [3, 4]])
        self.assertTrue(equal(int_matrix([[7, 10], [15, 22]]), matmul(a, a)))
        self.assertEqual((3, 2), matmul(zeros(3, 0), zeros(0, 2)).shape)
        self.assertTrue(is_zero(matmul(zeros(3, 0), zeros(0, 2))))

        with self.assertRaises(ValueError):
            matmul(a, zeros(3, 1))

        k = kron(column((1, 2)), int_matrix([[1, -1]]))
        self.assertTrue(equal(int_matrix([[1, -1], [2, -2]]), k))
        self.assertEqual((2, 3), hstack(zeros(2, 1), identity(2)).shape)

        with self.assertRaises(ValueError):
            hstack(zeros(2, 1), zeros(3, 1))

    def test_products_exact(self):
        big = int_matrix([[2 ** 70, 1], [0, 1]])
        square = matmul(big, big)
        self.assertEqual(object, square.dtype)
        self.assertEqual(2 ** 140, square[0, 0])
        self.assertEqual(2 ** 70 + 1, square[0, 1])
        product = kron(big, big)
        self.assertEqual((4, 4), product.shape)
        self.assertEqual(2 ** 140, product[0, 0])
        self.assertEqual(2 ** 70, product[0, 1])
        self.assertEqual((0, 6), kron(zeros(0, 3), big).shape)

    def test_modular(self):
        a = int_matrix([[7, -1], [5, 10]])
        self.assertTrue(equal(int_matrix([[2, 4], [0, 0]]), reduce_mod(a, 5)))
        self.assertTrue(equal(a, reduce_mod(a, 0)))
        self.assertTrue(is_zero(int_matrix([[5, -10]]), 5))
        self.assertFalse(is_zero(int_matrix([[5, -10]])))
        self.assertTrue(equal(int_matrix([[6]]), int_matrix([[1]]), 5))

    def test_smith_normal_form(self):
        self.assertSmith(int_matrix([[2, 0], [0, 3]]), [1, 6])
        self.assertSmith(int_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]), [2, 6, 12])
        self.assertSmith(int_matrix([[0, 0], [0, 0]]), [])
        self.assertSmith(int_matrix([[4, 6]]), [2])
        self.assertSmith(int_matrix([[-3], [0], [6]]), [3])
        self.assertEqual(0, smith_normal_form(zeros(3, 0)).rank)

        rng = np.random.default_rng(17)
        for _ in range(20):
            m = int_matrix(rng.integers(-6, 7, size=(3, 4)).tolist())
            form = self.assertSmith(m, smith_normal_form(m).invariants)
            invariants = form.invariants
            self.assertTrue(all(d > 0 for d in invariants))
            self.assertTrue(all(b % a == 0 for a, b in zip(invariants, invariants[1:])))

    def test_invert(self):
        m = int_matrix([[2, 1], [1, 1]])
        self.assertTrue(equal(int_matrix([[1, -1], [-1, 2]]), invert(m)))
        self.assertTrue(equal(int_matrix([[5]]), invert(int_matrix([[3]]), 7)))
        self.assertTrue(equal(int_matrix([[1, -2], [0, 1]]),
                              matrix_power(int_matrix([[1, 1], [0, 1]]), -2)))
        self.assertTrue(equal(identity(2), matrix_power(m, 0)))

        with self.assertRaises(ValueError):
            invert(int_matrix([[2]]))

        with self.assertRaises(ValueError):
            invert(int_matrix([[2]]), 4)

        with self.assertRaises(ValueError):
            invert(zeros(2, 3))

    def test_kernel(self):
        m = int_matrix([[1, 1, 0], [0, 2, 2]])
        kernel = kernel_basis(m)
        self.assertEqual((3, 1), kernel.shape)
        self.assertTrue(is_zero(matmul(m, kernel)))
        self.assertEqual(1, abs(kernel[0, 0]))

        modular = kernel_basis(int_matrix([[2]]), 4)
        self.assertEqual((1, 1), modular.shape)
        self.assertEqual(2, abs(modular[0, 0]))

        self.assertEqual((2, 5), image_generators(zeros(2, 3), 3).shape)
        self.assertEqual((2, 3), image_generators(zeros(2, 3)).shape)

    def test_solve_integer(self):
        a = int_matrix([[2, 0], [0, 3]])
        self.assertTupleEqual((2, 3), solve_integer(a, (4, 9)))

        with self.assertRaises(NotInSpan):
            solve_integer(a, (3, 0))

        with self.assertRaises(NotInSpan):
            solve_integer(int_matrix([[1], [1]]), (1, 2))

        with self.assertRaises(ValueError):
            solve_integer(a, (1,))

        b = int_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        x = solve_integer(b, as_vector(matmul(b, column((1, -2, 3)))))
        self.assertTrue(equal(matmul(b, column((1, -2, 3))), matmul(b, column(x))))

    def test_subquotient(self):
        quotient = Subquotient(identity(2), int_matrix([[2], [0]]))
        self.assertListEqual([0, 2], sorted(quotient.orders))
        self.assertEqual(2, len(quotient))
        self.assertTrue(any(quotient.coordinates((1, 0))))
        self.assertFalse(any(quotient.coordinates((2, 0))))
        self.assertTrue(quotient.contains((3, -1)))
        for rep in quotient.generators:
            self.assertTrue(quotient.contains(rep))

        torsion = Subquotient(int_matrix([[2], [0]]), int_matrix([[4], [0]]))
        self.assertTupleEqual((2,), torsion.orders)
        self.assertTupleEqual((1,), torsion.coordinates((2, 0)))
        self.assertTupleEqual((0,), torsion.coordinates((8, 0)))
        self.assertFalse(torsion.contains((1, 0)))

        with self.assertRaises(NotInSpan):
            torsion.lattice_coordinates((1, 0))

        with self.assertRaises(ValueError):
            Subquotient(identity(2), zeros(3, 1))

        trivial = Subquotient(identity(2), identity(2))
        self.assertTupleEqual((), trivial.orders)
        self.assertTupleEqual((), trivial.coordinates((5, 7)))


def suite():
    """Get Test suite object
    """
    return unittest.TestLoader().loadTestsFromTestCase(LinalgTestCase)


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
