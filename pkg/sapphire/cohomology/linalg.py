# -*- coding: utf-8 -*-
"""Exact integer linear algebra on numpy object arrays

All matrices are ``numpy.ndarray`` instances with ``dtype=object`` holding
Python integers, so entries never overflow. Empty shapes such as ``(3, 0)``
are supported throughout.
"""
from typing import Iterable, List, Optional, Sequence, Tuple
from collections import namedtuple
from math import gcd
import logging

import numpy as np

from .errors import NotInSpan

logger = logging.getLogger(__name__)


def int_matrix(rows: Iterable[Iterable[int]], shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """Create an exact integer matrix

    Args:
        rows: Nested iterables of integers
        shape: Required if *rows* is empty, checked otherwise

    Return:
        Array of dtype object
    """
    data = [[int(x) for x in row] for row in rows]
    if not data:
        if shape is None:
            raise ValueError("Shape of an empty matrix must be given")
        return zeros(*shape)
    widths = {len(row) for row in data}
    if len(widths) != 1:
        raise ValueError(f"Rows of unequal length {sorted(widths)}")
    matrix = zeros(len(data), widths.pop())
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            matrix[i, j] = x
    if shape is not None and matrix.shape != tuple(shape):
        raise ValueError(f"Expected shape {shape}, got {matrix.shape}")
    return matrix


def zeros(rows: int, cols: int) -> np.ndarray:
    matrix = np.empty((rows, cols), dtype=object)
    matrix.fill(0)
    return matrix


def identity(n: int) -> np.ndarray:
    matrix = zeros(n, n)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


def column(values: Sequence[int]) -> np.ndarray:
    """Column vector of shape ``(n, 1)``"""
    return int_matrix([[v] for v in values], shape=(len(values), 1))


def as_vector(values) -> Tuple[int, ...]:
    """Flatten an array or sequence into a tuple of Python integers"""
    return tuple(int(v) for v in np.asarray(values, dtype=object).reshape(-1))


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product that also handles empty inner or outer dimensions"""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply shapes {a.shape} and {b.shape}")
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1])
    return np.dot(a, b)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, the left factor varying slowest"""
    shape = (a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    if 0 in shape:
        return zeros(*shape)
    return np.kron(a, b)


def hstack(*blocks: np.ndarray) -> np.ndarray:
    """Concatenate columns; all blocks must have the same number of rows"""
    heights = {block.shape[0] for block in blocks}
    if len(heights) != 1:
        raise ValueError(f"Cannot stack blocks of heights {sorted(heights)}")
    height = heights.pop()
    width = sum(block.shape[1] for block in blocks)
    result = zeros(height, width)
    pos = 0
    for block in blocks:
        result[:, pos:pos + block.shape[1]] = block
        pos += block.shape[1]
    return result


def reduce_mod(a: np.ndarray, modulus: int) -> np.ndarray:
    """Reduce entries into ``0..modulus-1``; modulus 0 returns a copy"""
    if modulus:
        return a % modulus
    return a.copy()


def is_zero(a: np.ndarray, modulus: int = 0) -> bool:
    if modulus:
        return all(x % modulus == 0 for x in a.flat)
    return all(x == 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray, modulus: int = 0) -> bool:
    return a.shape == b.shape and is_zero(a - b, modulus)


class SmithForm(namedtuple("SmithForm", ["D", "U", "Uinv", "V", "Vinv", "rank"])):
    """Result of :func:`smith_normal_form`

    ``U M V = D`` with unimodular U, V and their exact inverses.
    """
    __slots__ = ()

    @property
    def invariants(self) -> List[int]:
        """Nonzero diagonal entries, each dividing the next"""
        return [self.D[i, i] for i in range(self.rank)]


class _SmithReduction(object):
    def __init__(self, m: np.ndarray) -> None:
        rows, cols = m.shape
        self.D = m.copy()
        self.U = identity(rows)
        self.Uinv = identity(rows)
        self.V = identity(cols)
        self.Vinv = identity(cols)

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.D[[i, j]] = self.D[[j, i]]
            self.U[[i, j]] = self.U[[j, i]]
            self.Uinv[:, [i, j]] = self.Uinv[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            self.D[:, [i, j]] = self.D[:, [j, i]]
            self.V[:, [i, j]] = self.V[:, [j, i]]
            self.Vinv[[i, j]] = self.Vinv[[j, i]]

    def add_row(self, i: int, j: int, k: int) -> None:
        """row_i += k row_j"""
        self.D[i] = self.D[i] + k * self.D[j]
        self.U[i] = self.U[i] + k * self.U[j]
        self.Uinv[:, j] = self.Uinv[:, j] - k * self.Uinv[:, i]

    def add_col(self, i: int, j: int, k: int) -> None:
        """col_i += k col_j"""
        self.D[:, i] = self.D[:, i] + k * self.D[:, j]
        self.V[:, i] = self.V[:, i] + k * self.V[:, j]
        self.Vinv[j] = self.Vinv[j] - k * self.Vinv[i]

    def negate_row(self, i: int) -> None:
        self.D[i] = -self.D[i]
        self.U[i] = -self.U[i]
        self.Uinv[:, i] = -self.Uinv[:, i]

    def pivot(self, s: int) -> Optional[Tuple[int, int]]:
        """Position of the nonzero entry of least absolute value in ``D[s:, s:]``"""
        best = None
        rows, cols = self.D.shape
        for i in range(s, rows):
            for j in range(s, cols):
                x = self.D[i, j]
                if x and (best is None or abs(x) < abs(self.D[best])):
                    best = (i, j)
        return best

    def non_divisible(self, s: int) -> Optional[int]:
        """Row below s holding an entry not divisible by ``D[s, s]``"""
        rows, cols = self.D.shape
        p = self.D[s, s]
        for i in range(s + 1, rows):
            for j in range(s + 1, cols):
                if self.D[i, j] % p:
                    return i
        return None

    def run(self) -> SmithForm:
        rows, cols = self.D.shape
        s = 0
        while s < min(rows, cols):
            position = self.pivot(s)
            if position is None:
                break
            self.swap_rows(s, position[0])
            self.swap_cols(s, position[1])
            p = self.D[s, s]
            for i in range(s + 1, rows):
                if self.D[i, s]:
                    self.add_row(i, s, -(self.D[i, s] // p))
            for j in range(s + 1, cols):
                if self.D[s, j]:
                    self.add_col(j, s, -(self.D[s, j] // p))
            if any(self.D[i, s] for i in range(s + 1, rows)) or \
                    any(self.D[s, j] for j in range(s + 1, cols)):
                # remainders are smaller than the pivot, pick again
                continue
            offending = self.non_divisible(s)
            if offending is not None:
                self.add_row(s, offending, 1)
                continue
            if self.D[s, s] < 0:
                self.negate_row(s)
            s += 1
        return SmithForm(self.D, self.U, self.Uinv, self.V, self.Vinv, s)


def smith_normal_form(m: np.ndarray) -> SmithForm:
    """Smith normal form with transformation matrices

    Args:
        m: Integer matrix of any shape

    Return:
        :class:`SmithForm` with ``U m V = D``, D diagonal with positive
        entries ``d_1 | d_2 | ...`` followed by zeros
    """
    form = _SmithReduction(np.asarray(m, dtype=object)).run()
    logger.debug(f"Smith normal form of {m.shape} matrix has rank {form.rank}")
    return form


def invert(m: np.ndarray, modulus: int = 0) -> np.ndarray:
    """Inverse of a square matrix over Z or Z/modulus

    Raises:
        ValueError: If the matrix is not invertible over the base
    """
    n, cols = m.shape
    if n != cols:
        raise ValueError(f"Only square matrices have inverses, got shape {m.shape}")
    form = smith_normal_form(reduce_mod(m, modulus) if modulus else m)
    inverse_diagonal = zeros(n, n)
    for i in range(n):
        d = form.D[i, i] if i < form.rank else 0
        if modulus:
            if gcd(d, modulus) != 1:
                raise ValueError(f"Matrix is not invertible modulo {modulus}")
            inverse_diagonal[i, i] = pow(d, -1, modulus) if modulus > 1 else 0
        else:
            if d != 1:
                raise ValueError("Matrix is not unimodular")
            inverse_diagonal[i, i] = 1
    result = matmul(matmul(form.V, inverse_diagonal), form.U)
    return reduce_mod(result, modulus)


def matrix_power(m: np.ndarray, k: int, modulus: int = 0) -> np.ndarray:
    """Integer power, negative exponents through :func:`invert`"""
    base = invert(m, modulus) if k < 0 else m
    result = identity(m.shape[0])
    for _ in range(abs(k)):
        result = reduce_mod(matmul(result, base), modulus)
    return result


def kernel_basis(m: np.ndarray, modulus: int = 0) -> np.ndarray:
    """Generators of ``{x : m x = 0}`` over Z or of its preimage mod *modulus*

    Args:
        m: Integer matrix of shape ``(rows, cols)``
        modulus: 0 for the kernel over Z. Otherwise the result generates the
            lattice ``{x in Z^cols : m x = 0 mod modulus}``, which contains
            ``modulus * Z^cols``.

    Return:
        Matrix whose columns generate the kernel
    """
    rows, cols = m.shape
    if modulus:
        m = hstack(m, modulus * identity(rows))
    form = smith_normal_form(m)
    return form.V[:cols, form.rank:]


def image_generators(m: np.ndarray, modulus: int = 0) -> np.ndarray:
    """Columns of *m*, plus ``modulus`` times the unit vectors if modulus is set"""
    if modulus:
        return hstack(m, modulus * identity(m.shape[0]))
    return m.copy()


def solve_integer(a: np.ndarray, b: Sequence[int]) -> Tuple[int, ...]:
    """One integer solution of ``a x = b``

    Raises:
        NotInSpan: If no integer solution exists
    """
    rows, cols = a.shape
    if len(b) != rows:
        raise ValueError(f"Right hand side has length {len(b)}, expected {rows}")
    form = smith_normal_form(a)
    rhs = as_vector(matmul(form.U, column(b)))
    y = [0] * cols
    for i, value in enumerate(rhs):
        if i < form.rank:
            d = form.D[i, i]
            if value % d:
                raise NotInSpan(f"No integer solution: {value} is not divisible by {d}")
            y[i] = value // d
        elif value:
            raise NotInSpan("Right hand side is not in the column span")
    return as_vector(matmul(form.V, column(y)))


class Subquotient(object):
    """Quotient of a lattice of cycles by a sublattice of boundaries

    Args:
        cycles: Matrix whose columns generate the cycle lattice ``L`` in
            ``Z^n``
        boundaries: Matrix whose columns generate ``B``, a sublattice of L

    Raises:
        NotInSpan: If a boundary generator is not in L
    """
    def __init__(self, cycles: np.ndarray, boundaries: np.ndarray) -> None:
        n = cycles.shape[0]
        if boundaries.shape[0] != n:
            raise ValueError(f"Cycles live in Z^{n}, boundaries in Z^{boundaries.shape[0]}")
        self.ambient = n
        form = smith_normal_form(cycles)
        self._cycle_form = form
        self.basis = matmul(form.Uinv[:, :form.rank],
                            _diagonal(form.invariants))
        relations = zeros(form.rank, boundaries.shape[1])
        for j in range(boundaries.shape[1]):
            relations[:, j] = list(self.lattice_coordinates(as_vector(boundaries[:, j])))
        quotient = smith_normal_form(relations)
        self._P = quotient.U
        self._Pinv = quotient.Uinv
        orders = [quotient.D[i, i] if i < quotient.rank else 0 for i in range(form.rank)]
        self._kept = [i for i, e in enumerate(orders) if e != 1]
        self.orders = tuple(orders[i] for i in self._kept)
        logger.debug(f"Subquotient of rank {form.rank} lattice in Z^{n} has orders {self.orders}")

    def __len__(self) -> int:
        return len(self.orders)

    def lattice_coordinates(self, x: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of x in the lattice basis

        Raises:
            NotInSpan: If x is not in the cycle lattice
        """
        form = self._cycle_form
        if len(x) != self.ambient:
            raise ValueError(f"Expected a vector of length {self.ambient}, got {len(x)}")
        image = as_vector(matmul(form.U, column(x)))
        coords = []
        for i, value in enumerate(image):
            if i < form.rank:
                d = form.D[i, i]
                if value % d:
                    raise NotInSpan(f"Vector {tuple(x)} is not in the cycle lattice")
                coords.append(value // d)
            elif value:
                raise NotInSpan(f"Vector {tuple(x)} is not in the cycle lattice")
        return tuple(coords)

    @property
    def generators(self) -> List[Tuple[int, ...]]:
        """Representatives of the cyclic summands, one per entry of :attr:`orders`"""
        return [as_vector(matmul(self.basis, column(as_vector(self._Pinv[:, i]))))
                for i in self._kept]

    def coordinates(self, x: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of the class of x, reduced modulo the finite orders"""
        z = self.lattice_coordinates(x)
        if not z:
            return tuple()
        transformed = as_vector(matmul(self._P, column(z)))
        return tuple(transformed[i] % e if e else transformed[i]
                     for i, e in zip(self._kept, self.orders))

    def contains(self, x: Sequence[int]) -> bool:
        try:
            self.lattice_coordinates(x)
        except NotInSpan:
            return False
        return True


def _diagonal(values: Sequence[int]) -> np.ndarray:
    matrix = zeros(len(values), len(values))
    for i, v in enumerate(values):
        matrix[i, i] = v
    return matrix
