# -*- coding: utf-8 -*-
"""Cup and cap products in low degrees

Cup products of two degree one classes evaluate ``u (x) v`` on the ``(1,1)``
component of the diagonal. Products of degree one with degree two classes go
through Poincare duality: the degree two class is capped with the
fundamental cycle, the result is capped with the degree one class and the
outcome in ``H_0`` is pulled back through the duality isomorphism in degree
three.
"""
from typing import List, Sequence, Tuple
from collections import namedtuple
import logging

import numpy as np

from .errors import DimensionMismatch, NotACocycle
from .coefficients import CoefficientModule, tensor, swap_matrix
from .diagonal import Diagonal
from .homology import (CohomologyClass, CohomologyGroup, HomologyGroup,
                       cochain_complex, chain_complex)
from .linalg import zeros, kron, matmul, column, as_vector
from .resolution import Resolution, RANKS
from .utils import chunk

logger = logging.getLogger(__name__)


class ProductEntry(namedtuple("ProductEntry", ["bidegree", "left", "right", "result"])):
    """One product of generators

    Attributes:
        bidegree: Degrees ``(p, q)`` of the factors
        left: Identifier of the left generator, ``"H<p>:<index>"``
        right: Identifier of the right generator
        result: Coordinates in the generators of the target group
    """
    __slots__ = ()

    @property
    def is_zero(self) -> bool:
        return not any(self.result)

    def as_dict(self) -> dict:
        return {"bidegree": list(self.bidegree), "left": self.left,
                "right": self.right, "result": list(self.result)}


class ProductTable(namedtuple("ProductTable", ["params", "left", "right", "entries"])):
    """All products of generators in bidegrees (1,1), (1,2) and (2,1)"""
    __slots__ = ()

    @property
    def nonzero(self) -> List[ProductEntry]:
        return [entry for entry in self.entries if not entry.is_zero]

    def lookup(self, bidegree: Tuple[int, int], left: str, right: str) -> ProductEntry:
        for entry in self.entries:
            if (entry.bidegree, entry.left, entry.right) == (tuple(bidegree), left, right):
                return entry
        raise KeyError(f"No product {left} x {right} in bidegree {bidegree}")


def generator_id(degree: int, index: int) -> str:
    return f"H{degree}:{index}"


class ProductCalculator(object):
    """Products over a fixed resolution

    Groups are computed on demand and cached per coefficient module.

    Args:
        resolution: Free resolution of the group
    """
    def __init__(self, resolution: Resolution) -> None:
        self.resolution = resolution
        self.diagonal = Diagonal(resolution)
        self._cochains = dict()
        self._chains = dict()
        self._cohomology = dict()
        self._homology = dict()

    def cohomology_group(self, module: CoefficientModule, degree: int) -> CohomologyGroup:
        key = (module, degree)
        if key not in self._cohomology:
            if module not in self._cochains:
                self._cochains[module] = cochain_complex(self.resolution, module)
            self._cohomology[key] = CohomologyGroup(self._cochains[module], degree)
        return self._cohomology[key]

    def homology_group(self, module: CoefficientModule, degree: int) -> HomologyGroup:
        key = (module, degree)
        if key not in self._homology:
            if module not in self._chains:
                self._chains[module] = chain_complex(self.resolution, module)
            self._homology[key] = HomologyGroup(self._chains[module], degree)
        return self._homology[key]

    def _closed(self, cocycle: CohomologyClass) -> None:
        group = self.cohomology_group(cocycle.module, cocycle.degree)
        if not group.is_cycle(cocycle.cocycle):
            raise NotACocycle(f"Cochain {cocycle.cocycle} of degree {cocycle.degree} "
                              f"over {cocycle.module} is not closed")

    @staticmethod
    def _blocks(vector: Sequence[int], size: int) -> List[np.ndarray]:
        return [column(block) for block in chunk(tuple(vector), size)]

    def cup_11(self, u: CohomologyClass, v: CohomologyClass) -> CohomologyClass:
        """Cup product of two degree one classes

        The value on ``rho_j`` is the sum over the terms ``c g e_k (x) h e_i``
        of the diagonal of ``c (g u_k) (x) (h v_i)``.

        Raises:
            DimensionMismatch: If the degrees are not one
            NotACocycle: If a factor is not closed
        """
        if u.degree != 1 or v.degree != 1:
            raise DimensionMismatch(f"cup_11 needs degrees (1,1), got ({u.degree},{v.degree})")
        self._closed(u)
        self._closed(v)
        a, b = u.module, v.module
        target = tensor(a, b)
        u_blocks = self._blocks(u.cocycle, a.rank)
        v_blocks = self._blocks(v.cocycle, b.rank)
        values = []
        for j in range(RANKS[2]):
            total = zeros(target.rank, 1)
            for (k, i, g, h), c in self.diagonal.delta11(j).terms:
                left = matmul(a.represent_element(g), u_blocks[k])
                right = matmul(b.represent_element(h), v_blocks[i])
                total = total + c * kron(left, right)
            values.extend(as_vector(total))
        result = self.cohomology_group(target, 2).class_of(values)
        logger.debug(f"cup_11 of {u.cocycle} and {v.cocycle} gives {result.coordinates}")
        return result

    def cap_with_zeta(self, n: int, u: CohomologyClass) -> Tuple[int, ...]:
        """Cap a cocycle of degree two or three with the fundamental cycle

        Return:
            Chain of degree ``3 - n`` over the same module

        Raises:
            NotACocycle: If u is not closed
        """
        if n not in (2, 3) or u.degree != n:
            raise DimensionMismatch(f"Capping with the fundamental cycle needs degree 2 or 3, "
                                    f"got n={n} and a class of degree {u.degree}")
        self._closed(u)
        module = u.module
        if n == 3:
            return module.reduce(u.cocycle)
        # (-1)^(deg u * deg x) with x in F_1
        sign = (-1) ** (n * (3 - n))
        component = self.diagonal.zeta_component12()
        u_blocks = self._blocks(u.cocycle, module.rank)
        chain = []
        for k in range(RANKS[1]):
            total = zeros(module.rank, 1)
            for j in range(RANKS[2]):
                entry = component.entry(k, j)
                if entry:
                    total = total + matmul(module.represent(entry.antipode()), u_blocks[j])
            chain.extend(as_vector(sign * total))
        return module.reduce(chain)

    def cap_11(self, u: CohomologyClass, chain: Sequence[int], module: CoefficientModule) -> Tuple[int, ...]:
        """Cap a degree one cocycle over A with a degree one chain over B

        The diagonal sends ``e_k`` to ``1 (x) e_k`` in bidegree ``(0,1)``, so
        the result in ``H_0(G; A (x) B)`` is ``sum_k u_k (x) b_k``.
        """
        if u.degree != 1:
            raise DimensionMismatch(f"Expected a degree one class, got degree {u.degree}")
        self._closed(u)
        a = u.module
        u_blocks = self._blocks(u.cocycle, a.rank)
        b_blocks = self._blocks(tuple(chain), module.rank)
        target = tensor(a, module)
        total = zeros(target.rank, 1)
        for k in range(RANKS[1]):
            total = total + kron(u_blocks[k], b_blocks[k])
        return target.reduce(as_vector(total))

    def dual_class(self, module: CoefficientModule, chain: Sequence[int]) -> CohomologyClass:
        """Preimage of a class in ``H_0`` under capping in degree three

        Raises:
            NotInSpan: If the degree three generators do not reach the class
        """
        h3 = self.cohomology_group(module, 3)
        h0 = self.homology_group(module, 0)
        images = [self.cap_with_zeta(3, g) for g in h3.generators]
        coefficients = h0.express_in_generators(chain, images)
        return h3.class_of(h3.combine(coefficients))

    def cup_12(self, u: CohomologyClass, v: CohomologyClass) -> CohomologyClass:
        """Cup product of a degree one and a degree two class"""
        if u.degree != 1 or v.degree != 2:
            raise DimensionMismatch(f"cup_12 needs degrees (1,2), got ({u.degree},{v.degree})")
        dual = self.cap_with_zeta(2, v)
        chain = self.cap_11(u, dual, v.module)
        result = self.dual_class(tensor(u.module, v.module), chain)
        logger.debug(f"cup_12 of {u.cocycle} and {v.cocycle} gives {result.coordinates}")
        return result

    def swap(self, c: CohomologyClass, left: CoefficientModule, right: CoefficientModule,
             sign: int = 1) -> CohomologyClass:
        """Transport a class over ``right (x) left`` to ``left (x) right``"""
        permutation = swap_matrix(left, right)
        size = left.rank * right.rank
        values = []
        for block in self._blocks(c.cocycle, size):
            values.extend(as_vector(sign * matmul(permutation, block)))
        return self.cohomology_group(tensor(left, right), c.degree).class_of(values)

    def cup_21(self, v: CohomologyClass, u: CohomologyClass) -> CohomologyClass:
        """Cup product of a degree two and a degree one class by graded commutativity"""
        if v.degree != 2 or u.degree != 1:
            raise DimensionMismatch(f"cup_21 needs degrees (2,1), got ({v.degree},{u.degree})")
        sign = (-1) ** (v.degree * u.degree)
        return self.swap(self.cup_12(u, v), v.module, u.module, sign)

    def product_table(self, left: CoefficientModule, right: CoefficientModule) -> "ProductTable":
        """All products of generators of ``H^*(G;left)`` and ``H^*(G;right)``"""
        entries = []
        products = ((1, 1, self.cup_11), (1, 2, self.cup_12), (2, 1, self.cup_21))
        for p, q, product in products:
            first = self.cohomology_group(left, p).generators
            second = self.cohomology_group(right, q).generators
            target = self.cohomology_group(tensor(left, right), p + q)
            if first and second and target.invariants.is_trivial:
                logger.warning(f"Target group of bidegree ({p},{q}) products over "
                               f"{left} and {right} is trivial")
            for i, x in enumerate(first):
                for j, y in enumerate(second):
                    result = product(x, y)
                    entries.append(ProductEntry((p, q), generator_id(p, i),
                                                generator_id(q, j), result.coordinates))
        return ProductTable(self.resolution.params, left, right, entries)


def product_table(resolution: Resolution, left: CoefficientModule,
                  right: CoefficientModule) -> ProductTable:
    return ProductCalculator(resolution).product_table(left, right)
