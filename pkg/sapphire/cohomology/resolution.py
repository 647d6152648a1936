# -*- coding: utf-8 -*-
"""Free resolution of Z over the group ring

::

    0 -> ZG --d3--> ZG^3 --d2--> ZG^3 --d1--> ZG --eps--> Z -> 0

Basis names are ``alpha1, beta1, alpha2`` in degree one and
``rho1, rho2, rho3`` in degree two. Differentials are stored as matrices
whose entry ``(i, j)`` is the coefficient of target basis element ``i`` in the
image of source basis element ``j``. A module element ``sum_j c_j e_j`` is
mapped to ``sum_i (sum_j c_j * d[i][j]) e_i``, i.e. coordinates multiply the
entries from the left.
"""
from typing import Iterator, List, Sequence, Tuple
from copy import copy
import logging

from .errors import DegreeOutOfRange
from .group import GroupParams, SapphireGroup, A1, B1, A2
from .group_ring import GroupRingElement, fox_gradient, fox_power

logger = logging.getLogger(__name__)

RANKS = (1, 3, 3, 1)
BASIS_NAMES = (("1",), ("alpha1", "beta1", "alpha2"), ("rho1", "rho2", "rho3"), ("1",))

Matrix = Tuple[Tuple[GroupRingElement, ...], ...]


class FreeVector(object):
    """Element of the free module F_k

    Args:
        degree: Degree k in 0..3
        coords: Ring element coordinates, one per basis element
    """
    __slots__ = ("degree", "coords")

    def __init__(self, degree: int, coords: Sequence[GroupRingElement]) -> None:
        if not 0 <= degree <= 3:
            raise DegreeOutOfRange(f"Free modules exist in degrees 0..3, got {degree}")
        if len(coords) != RANKS[degree]:
            raise ValueError(
                f"F{degree} has rank {RANKS[degree]}, got {len(coords)} coordinates")
        self.degree = degree
        self.coords = tuple(coords)

    @classmethod
    def zero(cls, group: SapphireGroup, degree: int) -> "FreeVector":
        return cls(degree, [GroupRingElement.zero(group)] * RANKS[degree])

    @classmethod
    def basis(cls, group: SapphireGroup, degree: int, index: int) -> "FreeVector":
        coords = [GroupRingElement.zero(group)] * RANKS[degree]
        coords[index] = GroupRingElement.one(group)
        return cls(degree, coords)

    def __str__(self) -> str:
        parts = []
        for coeff, name in zip(self.coords, BASIS_NAMES[self.degree]):
            if not coeff:
                continue
            parts.append(name if coeff == 1 else f"({coeff})*{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FreeVector({self.degree}, {self})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeVector):
            return NotImplemented
        return self.degree == other.degree and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.degree, self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def _check(self, other: "FreeVector") -> None:
        if other.degree != self.degree:
            raise ValueError(f"Cannot combine degrees {self.degree} and {other.degree}")

    def __add__(self, other: "FreeVector") -> "FreeVector":
        self._check(other)
        return FreeVector(self.degree, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "FreeVector") -> "FreeVector":
        self._check(other)
        return FreeVector(self.degree, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "FreeVector":
        return FreeVector(self.degree, [-a for a in self.coords])

    def __rmul__(self, scalar) -> "FreeVector":
        """Left module action of a ring element, group element or integer"""
        return FreeVector(self.degree, [scalar * a for a in self.coords])


class Resolution(object):
    """The length three free resolution of a sapphire group

    The kernel of d2 is generated by ``X0 rho1 + Y0 rho2 + Z0 rho3`` with
    ``Y0 = 1 - x^t y^u``, ``Z0 = a2 - x^t y^u`` and X0 assembled from Fox
    derivatives of powers of b1. The closed form of X0 needs ``r > 0`` and
    ``t < 0``, which validated parameters guarantee.

    Args:
        params: Validated gluing parameters
    """
    def __init__(self, params: GroupParams) -> None:
        self.params = params
        self.group = SapphireGroup(params)
        self.faulty = False
        self.X0 = self._build_x0()
        self.Y0, self.Z0 = self._build_y0_z0()
        self._d = {
            1: self._build_d1(),
            2: self._build_d2(),
            3: ((self.X0,), (self.Y0,), (self.Z0,)),
        }
        logger.debug(f"Built resolution for params {params}")

    def __repr__(self) -> str:
        return f"Resolution{self.params}"

    def _monomial(self, text: str) -> GroupRingElement:
        return GroupRingElement.monomial(self.group, self.group.parse(text))

    def _a1_power(self, n: int) -> GroupRingElement:
        group = self.group
        return GroupRingElement.monomial(group, group.power(group.generator(A1), n))

    def _build_x0(self) -> GroupRingElement:
        r, s, t, u = self.params
        group = self.group
        d_b = lambda n: fox_power(group, B1, n)
        total = GroupRingElement.zero(group)
        for k in range(t, r + t):
            total += self._a1_power(2 * k) * d_b(u)
        for k in range(r + t, r):
            total += self._a1_power(2 * k) * d_b(s)
        for k in range(t + 1, r + t + 1):
            total += self._a1_power(2 * k - 1) * d_b(-u)
        for k in range(r + t + 1, r + 1):
            total += self._a1_power(2 * k - 1) * d_b(-s)
        return total * self._monomial(B1)

    def _build_y0_z0(self) -> Tuple[GroupRingElement, GroupRingElement]:
        t, u = self.params.t, self.params.u
        xy = self._monomial(f"x^{t}*y^{u}")
        return 1 - xy, self._monomial(A2) - xy

    def _build_d1(self) -> Matrix:
        return (tuple(self._monomial(gen) - 1 for gen in (A1, B1, A2)),)

    def _build_d2(self) -> Matrix:
        r, s, t, u = self.params
        group = self.group
        zero = GroupRingElement.zero(group)
        b1_inv = self._monomial("b1^-1")
        a1, a2 = self._monomial(A1), self._monomial(A2)
        twist = self._monomial(f"x^{-t}*y^{-u}")
        rho1 = (1 - b1_inv, a1 + b1_inv, zero)
        rho2 = (fox_power(group, A1, 2 * r),
                self._a1_power(2 * r) * fox_power(group, B1, s),
                -a2 - 1)
        rho3 = ((a2 + twist) * fox_power(group, A1, 2 * t),
                (a2 * self._a1_power(2 * t) + self._monomial(f"b1^{-u}")) * fox_power(group, B1, u),
                1 - twist)
        return tuple(zip(rho1, rho2, rho3))

    @property
    def kernel_generator(self) -> Tuple[GroupRingElement, GroupRingElement, GroupRingElement]:
        """Coefficients ``(X0, Y0, Z0)`` of ``d3(1)``"""
        return self.X0, self.Y0, self.Z0

    def differential(self, k: int) -> Matrix:
        """Matrix of d_k for k in 1..3

        Raises:
            DegreeOutOfRange: For other k
        """
        try:
            return self._d[k]
        except KeyError:
            raise DegreeOutOfRange(f"Differentials exist in degrees 1..3, got {k}")

    def entry(self, k: int, i: int, j: int) -> GroupRingElement:
        return self.differential(k)[i][j]

    def apply_differential(self, v: FreeVector) -> FreeVector:
        """Apply d_k to a vector of degree k"""
        matrix = self.differential(v.degree)
        zero = GroupRingElement.zero(self.group)
        coords = []
        for row in matrix:
            total = zero
            for c, entry in zip(v.coords, row):
                if c and entry:
                    total = total + c * entry
            coords.append(total)
        return FreeVector(v.degree - 1, coords)

    def composite(self, k: int) -> Matrix:
        """Matrix of d_(k-1) d_k for k in 2..3"""
        outer, inner = self.differential(k - 1), self.differential(k)
        zero = GroupRingElement.zero(self.group)
        rows = []
        for i in range(len(outer)):
            row = []
            for j in range(len(inner[0])):
                total = zero
                for l in range(len(inner)):
                    total = total + inner[l][j] * outer[i][l]
                row.append(total)
            rows.append(tuple(row))
        return tuple(rows)

    def kernel_equations(self) -> List[GroupRingElement]:
        """Left hand sides of the system satisfied by ``(X0, Y0, Z0)``

        Equation ``i`` is ``X0 d2[i][0] + Y0 d2[i][1] + Z0 d2[i][2]``; all
        three vanish exactly.
        """
        d2 = self.differential(2)
        return [sum((c * entry for c, entry in zip(self.kernel_generator, row)),
                    GroupRingElement.zero(self.group))
                for row in d2]

    def augmentation_row(self) -> List[int]:
        """Augmentations of the entries of d1"""
        return [entry.augmentation() for entry in self.differential(1)[0]]

    def relator_jacobian(self) -> Matrix:
        """Fox derivatives of the relators in the layout of d2"""
        gradients = [fox_gradient(self.group, word) for word in self.params.relators]
        return tuple(tuple(gradient[gen] for gradient in gradients) for gen in (A1, B1, A2))

    def is_chain_complex(self) -> bool:
        return (all(not e for row in self.composite(2) for e in row)
                and all(not e for row in self.composite(3) for e in row)
                and not any(self.augmentation_row()))

    def with_flipped_sign(self, k: int, i: int, j: int) -> "Resolution":
        """Copy with one differential entry negated

        Only used as a negative control for the verification suite.
        """
        other = copy(self)
        rows = [list(row) for row in self.differential(k)]
        rows[i][j] = -rows[i][j]
        other._d = dict(self._d)
        other._d[k] = tuple(tuple(row) for row in rows)
        other.faulty = True
        logger.warning(f"Flipped the sign of d{k}[{i}][{j}] for params {self.params}")
        return other

    def dump(self) -> Iterator[str]:
        """Yield one line per differential entry"""
        for k in (1, 2, 3):
            for i, row in enumerate(self.differential(k)):
                for j, entry in enumerate(row):
                    target = BASIS_NAMES[k - 1][i]
                    source = BASIS_NAMES[k][j]
                    yield f"d{k}[{target},{source}] = {entry}"


def build_resolution(params: GroupParams) -> Resolution:
    return Resolution(params)
