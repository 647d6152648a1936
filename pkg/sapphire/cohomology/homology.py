# -*- coding: utf-8 -*-
"""Cohomology and homology of the resolution with coefficients

Cochains ``Hom_G(F_k, A)`` are vectors in ``A^(rank F_k)``: block ``i`` is
the value on basis element ``e_i``. Block ``(j, i)`` of the coboundary
``delta^k`` is the matrix of ``d_(k+1)[i][j]`` acting on A.

Chains ``A (x)_G F_k`` use the same coordinates. Block ``(i, j)`` of the
boundary ``d_k`` is the matrix of the antipode of ``d_k[i][j]``, which turns
the left action on A into the right action needed for the balanced product.
"""
from typing import List, Optional, Sequence, Tuple
from collections import namedtuple
from math import gcd
import logging

import numpy as np

from .errors import DegreeOutOfRange, NotACocycle, NotInSpan, DimensionMismatch
from .coefficients import CoefficientModule
from .linalg import (zeros, matmul, smith_normal_form, kernel_basis, image_generators,
                     solve_integer, column, as_vector, is_zero, Subquotient)
from .resolution import Resolution, RANKS, BASIS_NAMES
from .utils import signed_sum

logger = logging.getLogger(__name__)


class AbelianInvariants(namedtuple("AbelianInvariants", ["free_rank", "torsion"])):
    """Finitely generated abelian group ``Z^free_rank + Z_d1 + ... + Z_dk``

    Attributes:
        free_rank: Number of infinite cyclic summands
        torsion: Tuple of invariant factors ``d1 | d2 | ...``, each at least 2
    """
    __slots__ = ()

    def __new__(cls, free_rank: int = 0, torsion: Sequence[int] = ()) -> "AbelianInvariants":
        torsion = tuple(int(d) for d in torsion)
        if free_rank < 0:
            raise ValueError(f"Free rank must not be negative, got {free_rank}")
        if any(d < 2 for d in torsion):
            raise ValueError(f"Invariant factors must be at least 2, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"Invariant factors {torsion} do not form a divisibility chain")
        return super().__new__(cls, int(free_rank), torsion)

    @classmethod
    def from_cyclic(cls, orders: Sequence[int]) -> "AbelianInvariants":
        """Normalize a direct sum of cyclic groups

        Args:
            orders: Orders of cyclic summands; 0 stands for Z, 1 for the
                trivial group, negative orders are read as absolute values
        """
        orders = [abs(int(n)) for n in orders]
        free_rank = sum(1 for n in orders if n == 0)
        finite = [n for n in orders if n > 1]
        if not finite:
            return cls(free_rank, ())
        diagonal = zeros(len(finite), len(finite))
        for i, n in enumerate(finite):
            diagonal[i, i] = n
        factors = smith_normal_form(diagonal).invariants
        return cls(free_rank, tuple(d for d in factors if d > 1))

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> Optional[int]:
        """Number of elements, ``None`` for infinite groups"""
        if self.free_rank:
            return None
        result = 1
        for d in self.torsion:
            result *= d
        return result

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


class CohomologyClass(namedtuple("CohomologyClass", ["degree", "module", "cocycle", "coordinates"])):
    """Class of a cocycle together with its coordinates

    Attributes:
        degree: Cohomological degree
        module: Coefficient module
        cocycle: Representative as a tuple of integers
        coordinates: Coordinates in the generators of the group, each reduced
            modulo the order of its generator
    """
    __slots__ = ()

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)


class _Complex(object):
    """Integer matrices of a complex built from the resolution

    Args:
        resolution: Free resolution
        module: Coefficient module
    """
    def __init__(self, resolution: Resolution, module: CoefficientModule) -> None:
        self.resolution = resolution
        self.module = module
        self.modulus = module.modulus
        self._matrices = dict()

    def dimension(self, k: int) -> int:
        if 0 <= k <= 3:
            return RANKS[k] * self.module.rank
        return 0

    def _block_matrix(self, rows: int, cols: int, blocks) -> np.ndarray:
        n = self.module.rank
        matrix = zeros(rows * n, cols * n)
        for i, j, block in blocks:
            matrix[i * n:(i + 1) * n, j * n:(j + 1) * n] = block
        return matrix


class CochainComplex(_Complex):
    """``Hom_G(F, A)``, coboundaries raise the degree"""

    def differential(self, k: int) -> np.ndarray:
        """Matrix of ``delta^k`` for k in -1..3

        Degrees -1 and 3 give the zero maps into and out of the complex.

        Raises:
            DegreeOutOfRange: For other k
        """
        if not -1 <= k <= 3:
            raise DegreeOutOfRange(f"Coboundaries exist in degrees -1..3, got {k}")
        if k not in self._matrices:
            if k in (-1, 3):
                self._matrices[k] = zeros(self.dimension(k + 1), self.dimension(k))
            else:
                d = self.resolution.differential(k + 1)
                represent = self.module.represent
                blocks = ((j, i, represent(d[i][j]))
                          for i in range(RANKS[k]) for j in range(RANKS[k + 1]))
                self._matrices[k] = self._block_matrix(RANKS[k + 1], RANKS[k], blocks)
                logger.debug(f"Assembled delta^{k} over {self.module} "
                             f"of shape {self._matrices[k].shape}")
        return self._matrices[k]

    def is_complex(self) -> bool:
        return all(is_zero(matmul(self.differential(k + 1), self.differential(k)), self.modulus)
                   for k in range(0, 2))


class ChainComplex(_Complex):
    """``A (x)_G F``, boundaries lower the degree"""

    def differential(self, k: int) -> np.ndarray:
        """Matrix of ``d_k`` for k in 0..4

        Degrees 0 and 4 give the zero maps out of and into the complex.

        Raises:
            DegreeOutOfRange: For other k
        """
        if not 0 <= k <= 4:
            raise DegreeOutOfRange(f"Boundaries exist in degrees 0..4, got {k}")
        if k not in self._matrices:
            if k in (0, 4):
                self._matrices[k] = zeros(self.dimension(k - 1), self.dimension(k))
            else:
                d = self.resolution.differential(k)
                represent = self.module.represent
                blocks = ((i, j, represent(d[i][j].antipode()))
                          for i in range(RANKS[k - 1]) for j in range(RANKS[k]))
                self._matrices[k] = self._block_matrix(RANKS[k - 1], RANKS[k], blocks)
                logger.debug(f"Assembled d_{k} over {self.module} "
                             f"of shape {self._matrices[k].shape}")
        return self._matrices[k]

    def is_complex(self) -> bool:
        return all(is_zero(matmul(self.differential(k - 1), self.differential(k)), self.modulus)
                   for k in range(2, 4))


class _SubquotientGroup(object):
    """Common logic of cohomology and homology groups"""
    suffix = ""
    kind = ""

    def __init__(self, cplx: _Complex, degree: int, outgoing: np.ndarray, incoming: np.ndarray) -> None:
        if not 0 <= degree <= 3:
            raise DegreeOutOfRange(f"Groups exist in degrees 0..3, got {degree}")
        self.complex = cplx
        self.module = cplx.module
        self.degree = degree
        self.modulus = cplx.modulus
        self._outgoing = outgoing
        self._lattice = Subquotient(kernel_basis(outgoing, self.modulus),
                                    image_generators(incoming, self.modulus))
        self.invariants = AbelianInvariants.from_cyclic(self._lattice.orders)
        logger.debug(f"{self.kind}{degree} over {self.module} is {self.invariants}")

    def __str__(self) -> str:
        return f"{self.kind}{self.degree}(G;{self.module}) = {self.invariants}"

    @property
    def dimension(self) -> int:
        return self.complex.dimension(self.degree)

    @property
    def orders(self) -> Tuple[int, ...]:
        """Orders of the generators, 0 for infinite order"""
        return self._lattice.orders

    @property
    def representatives(self) -> List[Tuple[int, ...]]:
        """Cycle vectors of the generators"""
        return [self.module_reduce(g) for g in self._lattice.generators]

    def module_reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return self.module.reduce(vector)

    def _check_vector(self, vector: Sequence[int]) -> Tuple[int, ...]:
        vector = tuple(int(x) for x in vector)
        if len(vector) != self.dimension:
            raise DimensionMismatch(
                f"Expected a vector of length {self.dimension}, got {len(vector)}")
        return vector

    def is_cycle(self, vector: Sequence[int]) -> bool:
        vector = self._check_vector(vector)
        return is_zero(matmul(self._outgoing, column(vector)), self.modulus)

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of the class of a cycle in the generators

        Raises:
            NotACocycle: If the vector is not closed
        """
        vector = self._check_vector(vector)
        if not self.is_cycle(vector):
            raise NotACocycle(f"{self.render(vector)} is not closed in degree {self.degree}")
        return self._lattice.coordinates(vector)

    def is_zero(self, vector: Sequence[int]) -> bool:
        return not any(self.coordinates(vector))

    def equal(self, first: Sequence[int], second: Sequence[int]) -> bool:
        return self.coordinates(first) == self.coordinates(second)

    def order_of(self, vector: Sequence[int]) -> int:
        """Order of the class, 0 if infinite"""
        result = 1
        for c, n in zip(self.coordinates(vector), self.orders):
            if c == 0:
                continue
            if n == 0:
                return 0
            order = n // gcd(c, n)
            result = result * order // gcd(result, order)
        return result

    def combine(self, coefficients: Sequence[int]) -> Tuple[int, ...]:
        """Cycle representing the given combination of the generators"""
        if len(coefficients) != len(self.orders):
            raise DimensionMismatch(
                f"Expected {len(self.orders)} coefficients, got {len(coefficients)}")
        total = [0] * self.dimension
        for c, rep in zip(coefficients, self.representatives):
            total = [x + c * y for x, y in zip(total, rep)]
        return self.module_reduce(total)

    def express_in_generators(self, vector: Sequence[int],
                              generators: Sequence[Sequence[int]]) -> Tuple[int, ...]:
        """Solve ``[vector] = sum_j a_j [generators_j]``

        Raises:
            NotACocycle: If a vector is not closed
            NotInSpan: If the classes of *generators* do not reach the class
        """
        target = self.coordinates(vector)
        if not target:
            return tuple(0 for _ in generators)
        columns = [self.coordinates(g) for g in generators]
        size = len(self.orders)
        system = zeros(size, len(columns) + size)
        for j, coords in enumerate(columns):
            for i, c in enumerate(coords):
                system[i, j] = c
        for i, n in enumerate(self.orders):
            system[i, len(columns) + i] = n
        solution = solve_integer(system, target)
        return solution[:len(columns)]

    def generates(self, vectors: Sequence[Sequence[int]]) -> bool:
        """Whether the classes of *vectors* generate the whole group"""
        for rep in self.representatives:
            try:
                self.express_in_generators(rep, vectors)
            except NotInSpan:
                return False
        return True

    def render(self, vector: Sequence[int]) -> str:
        """Write a chain as combination of basis names; needs rank one modules"""
        n = self.module.rank
        names = BASIS_NAMES[self.degree]
        if n != 1:
            return str(tuple(vector))
        return signed_sum((c, name + self.suffix if name != "1" else "")
                          for c, name in zip(vector, names))


class CohomologyGroup(_SubquotientGroup):
    """``H^k(G;A)`` as cocycles modulo coboundaries

    Args:
        cplx: Cochain complex
        degree: Degree in 0..3
    """
    suffix = "*"
    kind = "H^"

    def __init__(self, cplx: CochainComplex, degree: int) -> None:
        super().__init__(cplx, degree,
                         outgoing=cplx.differential(degree),
                         incoming=cplx.differential(degree - 1))

    def class_of(self, cocycle: Sequence[int]) -> CohomologyClass:
        cocycle = self.module_reduce(self._check_vector(cocycle))
        return CohomologyClass(self.degree, self.module, cocycle, self.coordinates(cocycle))

    @property
    def generators(self) -> List[CohomologyClass]:
        return [self.class_of(rep) for rep in self.representatives]

    def random_coboundary(self, rng: np.random.Generator, bound: int = 3) -> Tuple[int, ...]:
        """Coboundary of a random cochain with entries in ``-bound..bound``"""
        incoming = self.complex.differential(self.degree - 1)
        source = [int(x) for x in rng.integers(-bound, bound + 1, size=incoming.shape[1])]
        if not source:
            return tuple(0 for _ in range(self.dimension))
        return self.module_reduce(as_vector(matmul(incoming, column(source))))


class HomologyGroup(_SubquotientGroup):
    """``H_k(G;A)`` as cycles modulo boundaries

    Args:
        cplx: Chain complex
        degree: Degree in 0..3
    """
    kind = "H_"

    def __init__(self, cplx: ChainComplex, degree: int) -> None:
        super().__init__(cplx, degree,
                         outgoing=cplx.differential(degree),
                         incoming=cplx.differential(degree + 1))


def cochain_complex(resolution: Resolution, module: CoefficientModule) -> CochainComplex:
    return CochainComplex(resolution, module)


def chain_complex(resolution: Resolution, module: CoefficientModule) -> ChainComplex:
    return ChainComplex(resolution, module)


def cohomology(resolution: Resolution, module: CoefficientModule) -> List[CohomologyGroup]:
    """Groups ``H^0 .. H^3`` with generator representatives"""
    cplx = cochain_complex(resolution, module)
    return [CohomologyGroup(cplx, k) for k in range(4)]


def homology(resolution: Resolution, module: CoefficientModule) -> List[HomologyGroup]:
    """Groups ``H_0 .. H_3``"""
    cplx = chain_complex(resolution, module)
    return [HomologyGroup(cplx, k) for k in range(4)]


def class_coordinates(cocycle: Sequence[int], degree: int,
                      resolution: Resolution, module: CoefficientModule) -> Tuple[int, ...]:
    return CohomologyGroup(cochain_complex(resolution, module), degree).coordinates(cocycle)


def express_in_generators(group: CohomologyGroup, cocycle: Sequence[int],
                          generators: Sequence[CohomologyClass]) -> Tuple[int, ...]:
    return group.express_in_generators(cocycle, [g.cocycle for g in generators])
