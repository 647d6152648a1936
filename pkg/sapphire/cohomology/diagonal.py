# -*- coding: utf-8 -*-
"""Contracting homotopy, partial diagonal approximation and fundamental cycle

Tensor products ``F_p (x) F_q`` are taken over Z with G acting diagonally.
A Z-basis is given by ``g e_k (x) h e_i``, so coordinates are integer
combinations of quadruples ``(k, i, g, h)``.

The balanced products ``F_p (x)_G F_q`` that carry the fundamental cycle are
stored as matrices of ring elements ``W`` meaning
``sum_{k,j} (W[k][j] e_k) (x) f_j``.
"""
from typing import Dict, List, Sequence, Tuple
import logging

from .group import A1, B1, A2, GroupElement
from .group_ring import GroupRingElement, fox_gradient, fox_decompose
from .resolution import Resolution, FreeVector, RANKS, BASIS_NAMES

logger = logging.getLogger(__name__)

Key = Tuple[int, int, GroupElement, GroupElement]


def _power_terms(n: int) -> List[Tuple[int, int]]:
    """Exponents and signs of the Fox derivative of ``g^n`` with respect to g"""
    if n >= 0:
        return [(k, 1) for k in range(n)]
    return [(k, -1) for k in range(n, 0)]


class TensorVector(object):
    """Element of ``F_p (x) F_q`` over Z

    Args:
        group: Ambient group
        bidegree: Pair ``(p, q)``
        terms: Mapping from ``(k, i, g, h)`` to integer coefficients for the
            basis element ``g e_k (x) h e_i``
    """
    __slots__ = ("group", "bidegree", "_terms")

    def __init__(self, group, bidegree: Tuple[int, int], terms: Dict[Key, int] = None) -> None:
        p, q = bidegree
        if p < 0 or q < 0 or p + q > 3:
            raise ValueError(f"Invalid bidegree {bidegree}")
        self.group = group
        self.bidegree = (p, q)
        self._terms = {key: c for key, c in (terms or dict()).items() if c}

    @classmethod
    def zero(cls, group, bidegree: Tuple[int, int]) -> "TensorVector":
        return cls(group, bidegree)

    @classmethod
    def outer(cls,
              bidegree: Tuple[int, int],
              k: int, left: GroupRingElement,
              i: int, right: GroupRingElement) -> "TensorVector":
        """The tensor ``(left e_k) (x) (right e_i)`` expanded over Z"""
        terms = dict()
        for g, c in left.terms:
            for h, d in right.terms:
                key = (k, i, g, h)
                terms[key] = terms.get(key, 0) + c * d
        return cls(left.group, bidegree, terms)

    def __str__(self) -> str:
        p, q = self.bidegree
        parts = []
        for (k, i, g, h), c in self.terms:
            left = BASIS_NAMES[p][k] if g.is_identity else f"{g}*{BASIS_NAMES[p][k]}"
            right = BASIS_NAMES[q][i] if h.is_identity else f"{h}*{BASIS_NAMES[q][i]}"
            prefix = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{prefix}{left} (x) {right}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TensorVector({self.bidegree}, {self})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.bidegree == other.bidegree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.bidegree, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _combine(self, other: "TensorVector", sign: int) -> "TensorVector":
        if other.bidegree != self.bidegree:
            raise ValueError(f"Cannot combine bidegrees {self.bidegree} and {other.bidegree}")
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + sign * c
        return TensorVector(self.group, self.bidegree, terms)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        return self._combine(other, 1)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self._combine(other, -1)

    def __neg__(self) -> "TensorVector":
        return TensorVector(self.group, self.bidegree, {k: -c for k, c in self._terms.items()})

    @property
    def terms(self) -> list:
        """Terms ``((k, i, g, h), c)`` in a deterministic order"""
        return sorted(self._terms.items(),
                      key=lambda item: (item[0][0], item[0][1],
                                        item[0][2].sort_key, item[0][3].sort_key))

    def component(self, k: int, i: int) -> Dict[Tuple[GroupElement, GroupElement], int]:
        """Coordinate at ``e_k (x) e_i`` as an element of Z[G x G]"""
        return {(g, h): c for (kk, ii, g, h), c in self._terms.items() if (kk, ii) == (k, i)}

    def coefficient(self, k: int, i: int, g: GroupElement, h: GroupElement) -> int:
        return self._terms.get((k, i, g, h), 0)

    def act(self, e: GroupRingElement) -> "TensorVector":
        """Diagonal action of a ring element"""
        multiply = self.group.multiply
        terms = dict()
        for x, c in e.terms:
            for (k, i, g, h), d in self._terms.items():
                key = (k, i, multiply(x, g), multiply(x, h))
                terms[key] = terms.get(key, 0) + c * d
        return TensorVector(self.group, self.bidegree, terms)

    def left_boundary(self, resolution: Resolution) -> "TensorVector":
        """Apply ``d (x) 1``"""
        p, q = self.bidegree
        if p == 0:
            return TensorVector.zero(self.group, (0, q))
        matrix = resolution.differential(p)
        multiply = self.group.multiply
        terms = dict()
        for (k, i, g, h), c in self._terms.items():
            for target, row in enumerate(matrix):
                for x, d in row[k].terms:
                    key = (target, i, multiply(g, x), h)
                    terms[key] = terms.get(key, 0) + c * d
        return TensorVector(self.group, (p - 1, q), terms)

    def right_boundary(self, resolution: Resolution) -> "TensorVector":
        """Apply ``(-1)^p (1 (x) d)``"""
        p, q = self.bidegree
        if q == 0:
            return TensorVector.zero(self.group, (p, 0))
        sign = (-1) ** p
        matrix = resolution.differential(q)
        multiply = self.group.multiply
        terms = dict()
        for (k, i, g, h), c in self._terms.items():
            for target, row in enumerate(matrix):
                for x, d in row[i].terms:
                    key = (k, target, g, multiply(h, x))
                    terms[key] = terms.get(key, 0) + sign * c * d
        return TensorVector(self.group, (p, q - 1), terms)

    def counit_left(self) -> FreeVector:
        """Apply ``eps (x) 1``, defined on bidegrees ``(0, q)``"""
        p, q = self.bidegree
        if p != 0:
            raise ValueError(f"Augmentation acts on the left factor in degree 0, got {p}")
        coords = [dict() for _ in range(RANKS[q])]
        for (_, i, _, h), c in self._terms.items():
            coords[i][h] = coords[i].get(h, 0) + c
        return FreeVector(q, [GroupRingElement(self.group, terms) for terms in coords])

    def counit_right(self) -> FreeVector:
        """Apply ``1 (x) eps``, defined on bidegrees ``(p, 0)``"""
        p, q = self.bidegree
        if q != 0:
            raise ValueError(f"Augmentation acts on the right factor in degree 0, got {q}")
        coords = [dict() for _ in range(RANKS[p])]
        for (k, _, g, _), c in self._terms.items():
            coords[k][g] = coords[k].get(g, 0) + c
        return FreeVector(p, [GroupRingElement(self.group, terms) for terms in coords])


class BalancedTensor(object):
    """Element of ``F_p (x)_G F_q``

    Args:
        bidegree: Pair ``(p, q)``
        coords: Matrix of ring elements of shape ``RANKS[p] x RANKS[q]``
    """
    __slots__ = ("bidegree", "coords")

    def __init__(self, bidegree: Tuple[int, int],
                 coords: Sequence[Sequence[GroupRingElement]]) -> None:
        p, q = bidegree
        if len(coords) != RANKS[p] or any(len(row) != RANKS[q] for row in coords):
            raise ValueError(f"Coordinates do not match bidegree {bidegree}")
        self.bidegree = (p, q)
        self.coords = tuple(tuple(row) for row in coords)

    def __str__(self) -> str:
        p, q = self.bidegree
        parts = []
        for k, row in enumerate(self.coords):
            for j, entry in enumerate(row):
                if entry:
                    parts.append(f"({entry})*{BASIS_NAMES[p][k]} (x) {BASIS_NAMES[q][j]}")
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BalancedTensor):
            return NotImplemented
        return self.bidegree == other.bidegree and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.bidegree, self.coords))

    def __bool__(self) -> bool:
        return any(entry for row in self.coords for entry in row)

    def __neg__(self) -> "BalancedTensor":
        return BalancedTensor(self.bidegree, [[-e for e in row] for row in self.coords])

    def __add__(self, other: "BalancedTensor") -> "BalancedTensor":
        if other.bidegree != self.bidegree:
            raise ValueError(f"Cannot combine bidegrees {self.bidegree} and {other.bidegree}")
        return BalancedTensor(self.bidegree,
                              [[a + b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.coords, other.coords)])

    def entry(self, k: int, j: int) -> GroupRingElement:
        return self.coords[k][j]

    def left_boundary(self, resolution: Resolution) -> "BalancedTensor":
        """Apply ``d (x) 1``: ``(W e_k) (x) f -> (W d(e_k)) (x) f``"""
        p, q = self.bidegree
        matrix = resolution.differential(p)
        zero = GroupRingElement.zero(resolution.group)
        coords = [[zero] * RANKS[q] for _ in range(RANKS[p - 1])]
        for k, row in enumerate(self.coords):
            for j, w in enumerate(row):
                if not w:
                    continue
                for target in range(RANKS[p - 1]):
                    coords[target][j] = coords[target][j] + w * matrix[target][k]
        return BalancedTensor((p - 1, q), coords)

    def right_boundary(self, resolution: Resolution) -> "BalancedTensor":
        """Apply ``(-1)^p (1 (x) d)``

        Moving the ring coefficient of ``d(f_j)`` across the tensor sign
        turns it into its antipode acting on the left factor.
        """
        p, q = self.bidegree
        sign = (-1) ** p
        matrix = resolution.differential(q)
        zero = GroupRingElement.zero(resolution.group)
        coords = [[zero] * RANKS[q - 1] for _ in range(RANKS[p])]
        for k, row in enumerate(self.coords):
            for j, w in enumerate(row):
                if not w:
                    continue
                for target in range(RANKS[q - 1]):
                    moved = matrix[target][j].antipode() * w
                    coords[k][target] = coords[k][target] + moved.scale(sign)
        return BalancedTensor((p, q - 1), coords)


class Diagonal(object):
    """Contracting homotopy and low-degree diagonal of a resolution

    Args:
        resolution: Resolution whose diagonal is computed
    """
    def __init__(self, resolution: Resolution) -> None:
        self.resolution = resolution
        self.group = resolution.group
        self._cache = dict()

    def _ring(self, text: str) -> GroupRingElement:
        return GroupRingElement.monomial(self.group, self.group.parse(text))

    def s0(self, e: GroupRingElement) -> FreeVector:
        """Contracting homotopy ``F_0 -> F_1``

        On a group element ``g = w x^i y^j`` this is the vector of Fox
        derivatives of the word ``w a1^(2i) b1^j``; it is extended additively.
        """
        group = self.group
        coords = [GroupRingElement.zero(group)] * 3
        for g, c in e.terms:
            gradient = fox_gradient(group, group.word_representative(g))
            for idx, gen in enumerate((A1, B1, A2)):
                if gradient[gen]:
                    coords[idx] = coords[idx] + gradient[gen].scale(c)
        return FreeVector(1, coords)

    def s_minus1(self, n: int) -> GroupRingElement:
        """Section ``Z -> F_0`` of the augmentation"""
        return GroupRingElement.one(self.group).scale(n)

    def delta0(self) -> TensorVector:
        """``1 (x) 1``"""
        one = GroupRingElement.one(self.group)
        return TensorVector.outer((0, 0), 0, one, 0, one)

    def delta0_of(self, e: GroupRingElement) -> TensorVector:
        """Image of a ring element under the diagonal in degree zero"""
        return self.delta0().act(e)

    def delta1(self, index: int) -> Tuple[TensorVector, TensorVector]:
        """Components ``(1,0)`` and ``(0,1)`` of the diagonal on a degree one basis element

        Return:
            ``(e (x) gen, 1 (x) e)`` for the basis element ``e`` belonging to
            generator ``gen``
        """
        one = GroupRingElement.one(self.group)
        gen = self._ring((A1, B1, A2)[index])
        return (TensorVector.outer((1, 0), index, one, 0, gen),
                TensorVector.outer((0, 1), 0, one, index, one))

    def _twisted(self, e: GroupRingElement, index: int) -> TensorVector:
        """``sum_g e_g s0(g) (x) g e_index``"""
        total = TensorVector.zero(self.group, (1, 1))
        for g, c in e.terms:
            left = self.s0(GroupRingElement.monomial(self.group, g, c))
            right = GroupRingElement.monomial(self.group, g)
            for k, coeff in enumerate(left.coords):
                if coeff:
                    total = total + TensorVector.outer((1, 1), k, coeff, index, right)
        return total

    def delta11(self, index: int) -> TensorVector:
        """Closed form of the ``(1,1)`` component on ``rho_(index+1)``"""
        key = ("closed", index)
        if key not in self._cache:
            self._cache[key] = self._closed_delta11(index)
        return self._cache[key]

    def _element(self, a2: bool, e: int, j: int) -> GroupElement:
        """``a2^[a2] a1^e b1^j``"""
        group = self.group
        g = group.generator(A2) if a2 else group.identity
        g = group.multiply(g, group.power(group.generator(A1), e))
        return group.multiply(g, group.power(group.generator(B1), j))

    def _s0_term(self, coeff: int, a2: bool, e: int, j: int, index: int) -> TensorVector:
        """``coeff s0(g) (x) g e_index`` for ``g = a2^[a2] a1^e b1^j``

        The word ``a2^[a2] a1^e b1^j`` must be the normal form word of g, so
        ``s0(g)`` is written out term by term:
        ``[a2] alpha2 + p sum_k a1^k alpha1 + p a1^e sum_l b1^l beta1`` with
        ``p = a2^[a2]`` and k, l running over the Fox power of e and j.
        """
        group = self.group
        g = self._element(a2, e, j)
        prefix = group.generator(A2) if a2 else group.identity
        terms = dict()

        def add(k: int, left: GroupElement, c: int) -> None:
            key = (k, index, left, g)
            terms[key] = terms.get(key, 0) + coeff * c

        if a2:
            add(2, group.identity, 1)
        a1, b1 = group.generator(A1), group.generator(B1)
        for k, sign in _power_terms(e):
            add(0, group.multiply(prefix, group.power(a1, k)), sign)
        base = group.multiply(prefix, group.power(a1, e))
        for k, sign in _power_terms(j):
            add(1, group.multiply(base, group.power(b1, k)), sign)
        return TensorVector(group, (1, 1), terms)

    def _closed_delta11(self, index: int) -> TensorVector:
        r, s, t, u = self.resolution.params
        group = self.group
        one = GroupRingElement.one(group)
        alpha1, beta1, alpha2 = 0, 1, 2
        total = TensorVector.zero(group, (1, 1))
        if index == 0:
            b1_inv = self._ring("b1^-1")
            a1 = self._ring(A1)
            return (TensorVector.outer((1, 1), beta1, b1_inv, alpha1, b1_inv)
                    + TensorVector.outer((1, 1), alpha1, one, beta1, a1)
                    - TensorVector.outer((1, 1), beta1, b1_inv, beta1, b1_inv))
        if index == 1:
            for m, sign in _power_terms(2 * r):
                total = total + self._s0_term(sign, False, m, 0, alpha1)
            for j, sign in _power_terms(s):
                total = total + self._s0_term(sign, False, 2 * r, j, beta1)
            return total - TensorVector.outer((1, 1), alpha2, one, alpha2, self._ring(A2))
        if index == 2:
            # x^-t y^-u a1^l = a1^(l-2t) b1^(+-u)
            for l, sign in _power_terms(2 * t):
                total = total + self._s0_term(sign, True, l, 0, alpha1)
                total = total + self._s0_term(sign, False, l - 2 * t, u if l % 2 else -u, alpha1)
            for j, sign in _power_terms(u):
                total = total + self._s0_term(sign, True, 2 * t, j, beta1)
                total = total + self._s0_term(sign, False, 0, j - u, beta1)
            return total + self._s0_term(-1, False, -2 * t, -u, alpha2)
        raise IndexError(f"F2 has basis rho1, rho2, rho3, got index {index}")

    def handel_delta11(self, index: int) -> TensorVector:
        """``(1,1)`` component of ``s~ Delta_1 d_2(rho)``

        ``Delta_1`` applied to ``c g e_i`` has ``(0,1)`` part
        ``c g (x) g e_i``; the homotopy ``s~`` sends it to
        ``c s0(g) (x) g e_i``. The ``(1,0)`` part lands in bidegree ``(2,0)``.
        """
        key = ("handel", index)
        if key not in self._cache:
            column = [row[index] for row in self.resolution.differential(2)]
            total = TensorVector.zero(self.group, (1, 1))
            for i, entry in enumerate(column):
                if entry:
                    total = total + self._twisted(entry, i)
            self._cache[key] = total
            logger.debug(f"Handel diagonal on {BASIS_NAMES[2][index]} has {len(total.terms)} terms")
        return self._cache[key]

    def delta11_of(self, v: FreeVector) -> TensorVector:
        """Extend the closed form G-linearly to a degree two vector"""
        if v.degree != 2:
            raise ValueError(f"Expected a degree two vector, got degree {v.degree}")
        total = TensorVector.zero(self.group, (1, 1))
        for index, coeff in enumerate(v.coords):
            if coeff:
                total = total + self.delta11(index).act(coeff)
        return total

    def zeta_pi03(self) -> BalancedTensor:
        """Component ``1 (x) 1`` of the fundamental cycle"""
        return BalancedTensor((0, 3), [[GroupRingElement.one(self.group)]])

    def zeta_pi12(self) -> BalancedTensor:
        """Decompositions of the antipodes of ``X0, Y0, Z0``

        Column ``j`` holds the decomposition ``(A, B, C)`` of ``psi(d3[j])``
        with ``psi(d3[j]) = A(a1-1) + B(b1-1) + C(a2-1)``.
        """
        if "pi12" not in self._cache:
            columns = [fox_decompose(entry.antipode()) for entry in self.resolution.kernel_generator]
            self._cache["pi12"] = BalancedTensor((1, 2), [list(row) for row in zip(*columns)])
        return self._cache["pi12"]

    def zeta_component12(self) -> BalancedTensor:
        """``(1,2)`` component of the fundamental cycle

        The boundary of ``1 (x) 1`` in bidegree ``(0,2)`` equals the left
        boundary of :meth:`zeta_pi12`, so the cycle carries its negative.
        """
        return -self.zeta_pi12()

    def zeta_boundary02(self) -> BalancedTensor:
        """Bidegree ``(0,2)`` part of the boundary of the fundamental cycle"""
        res = self.resolution
        return self.zeta_component12().left_boundary(res) + self.zeta_pi03().right_boundary(res)
