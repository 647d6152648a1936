# -*- coding: utf-8 -*-
"""Coefficient modules with an action of the group

Grammar accepted by :func:`parse_coefficient`::

    coeff := "Z"
           | "Zeta:" sign "," sign "," sign      images of a1, b1, a2
           | "Zp:" integer                       integer >= 2
           | "tensor(" coeff "," coeff ")"
"""
from typing import Dict, Optional, Sequence, Tuple
from math import gcd
import logging

import numpy as np

from .errors import InvalidModule, CoefficientSyntaxError
from .group import GroupParams, GroupElement, Character, A1, B1, A2
from .group_ring import GroupRingElement
from .linalg import (int_matrix, identity, zeros, matmul, kron, reduce_mod,
                     equal, invert, matrix_power)
from .utils import parse_ints, split_arguments

logger = logging.getLogger(__name__)


class CoefficientModule(object):
    """Finitely generated abelian group ``Z^n`` or ``(Z_m)^n`` with G-action

    Args:
        act_a1, act_b1, act_a2: Square integer matrices of the generator
            actions, applied to column vectors
        modulus: 0 for ``Z^n``, ``m >= 2`` for ``(Z_m)^n``. Modulus 1 is the
            zero module, arising as a tensor product of coprime torsion.
        label: Text shown in reports
    """
    def __init__(self,
                 act_a1: np.ndarray,
                 act_b1: np.ndarray,
                 act_a2: np.ndarray,
                 modulus: int = 0,
                 label: Optional[str] = None) -> None:
        if modulus < 0:
            raise InvalidModule(f"Modulus must not be negative, got {modulus}")
        actions = [np.asarray(a, dtype=object) for a in (act_a1, act_b1, act_a2)]
        shapes = {a.shape for a in actions}
        if len(shapes) != 1:
            raise InvalidModule(f"Action matrices have different shapes {sorted(shapes)}")
        shape = shapes.pop()
        if len(shape) != 2 or shape[0] != shape[1]:
            raise InvalidModule(f"Action matrices must be square, got shape {shape}")
        self.modulus = modulus
        self.rank = shape[0]
        self._act = {gen: reduce_mod(a, modulus) for gen, a in zip((A1, B1, A2), actions)}
        self._inverse = dict()
        self.label = label or f"M{self.rank}"
        self._cache = dict()

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"CoefficientModule({self.label})"

    @property
    def key(self) -> tuple:
        """Hashable description of the underlying group and the actions"""
        return (self.modulus, self.rank) + tuple(
            tuple(self._act[gen].flat) for gen in (A1, B1, A2))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientModule):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def is_free(self) -> bool:
        return self.modulus == 0

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 or self.modulus == 1

    def action(self, gen: str) -> np.ndarray:
        """Matrix of one of ``a1``, ``b1`` or ``a2``"""
        return self._act[gen].copy()

    def inverse_action(self, gen: str) -> np.ndarray:
        """Matrix of the inverse of a generator

        Raises:
            InvalidModule: If the action matrix is not invertible
        """
        if gen not in self._inverse:
            try:
                self._inverse[gen] = invert(self._act[gen], self.modulus)
            except ValueError as err:
                raise InvalidModule(f"Action of {gen} on {self.label} is not invertible: {err}")
        return self._inverse[gen]

    def _power(self, gen: str, k: int) -> np.ndarray:
        base = self.inverse_action(gen) if k < 0 else self._act[gen]
        return matrix_power(base, abs(k), self.modulus)

    def check(self, params: GroupParams) -> "CoefficientModule":
        """Verify invertibility and the three defining relations

        Return:
            self

        Raises:
            InvalidModule: If an action is not invertible or a relation fails
        """
        r, s, t, u = params
        m = self.modulus
        a1, b1, a2 = (self._act[gen] for gen in (A1, B1, A2))
        a1_inv, b1_inv, a2_inv = (self.inverse_action(gen) for gen in (A1, B1, A2))

        def product(*factors):
            result = identity(self.rank)
            for factor in factors:
                result = reduce_mod(matmul(result, factor), m)
            return result

        relations = (
            ("a1 b1 a1^-1 = b1^-1", product(a1, b1, a1_inv), b1_inv),
            ("a2^2 = a1^2r b1^s", product(a2, a2),
             product(self._power(A1, 2 * r), self._power(B1, s))),
            ("a2 a1^2t b1^u a2^-1 = b1^-u a1^-2t",
             product(a2, self._power(A1, 2 * t), self._power(B1, u), a2_inv),
             product(self._power(B1, -u), self._power(A1, -2 * t))),
        )
        for name, lhs, rhs in relations:
            if not equal(lhs, rhs, m):
                raise InvalidModule(f"Relation {name} fails on {self.label} for params {params}")
        return self

    def represent_element(self, g: GroupElement) -> np.ndarray:
        """Matrix of a group element ``w x^i y^j``"""
        if g not in self._cache:
            result = identity(self.rank)
            for letter in g.word:
                result = reduce_mod(matmul(result, self._act[letter]), self.modulus)
            result = reduce_mod(matmul(result, self._power(A1, 2 * g.i)), self.modulus)
            result = reduce_mod(matmul(result, self._power(B1, g.j)), self.modulus)
            self._cache[g] = result
        return self._cache[g]

    def represent(self, e: GroupRingElement) -> np.ndarray:
        """Matrix of a ring element, reduced modulo the modulus"""
        result = zeros(self.rank, self.rank)
        for g, c in e.terms:
            result = result + c * self.represent_element(g)
        return reduce_mod(result, self.modulus)

    def reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Normalize a coordinate vector of a direct sum of copies of this module"""
        if self.modulus:
            return tuple(int(x) % self.modulus for x in vector)
        return tuple(int(x) for x in vector)


def module_trivial_Z() -> CoefficientModule:
    one = identity(1)
    return CoefficientModule(one, one, one, label="Z")


def module_character(chi: Character, params: Optional[GroupParams] = None) -> CoefficientModule:
    """Z twisted by an orientation character

    Raises:
        InvalidCharacter: If params are given and chi violates the relations
    """
    if params is not None:
        chi.check(params)
    if chi.is_trivial:
        return module_trivial_Z()
    label = f"Zeta:{chi.ea1},{chi.eb1},{chi.ea2}"
    return CoefficientModule(*(int_matrix([[e]]) for e in chi), label=label)


def module_Zp(p: int) -> CoefficientModule:
    """Trivial module ``Z/p`` for any ``p >= 2``"""
    if p < 2:
        raise InvalidModule(f"Modulus of Zp must be at least 2, got {p}")
    one = identity(1)
    return CoefficientModule(one, one, one, modulus=p, label=f"Zp:{p}")


def tensor(a: CoefficientModule, b: CoefficientModule) -> CoefficientModule:
    """Tensor product over Z with diagonal action

    The underlying group of ``(Z_m)^n (x) (Z_k)^l`` is ``(Z_gcd(m,k))^(nl)``
    with ``gcd(0, k) = k``. Basis vector ``(i, j)`` has index ``i * l + j``.
    """
    modulus = gcd(a.modulus, b.modulus)
    actions = [kron(a.action(gen), b.action(gen)) for gen in (A1, B1, A2)]
    if a.label == "Z":
        label = b.label
    elif b.label == "Z":
        label = a.label
    else:
        label = f"tensor({a.label},{b.label})"
    return CoefficientModule(*actions, modulus=modulus, label=label)


def swap_matrix(a: CoefficientModule, b: CoefficientModule) -> np.ndarray:
    """Permutation ``B (x) A -> A (x) B``"""
    n, l = a.rank, b.rank
    matrix = zeros(n * l, n * l)
    for i in range(n):
        for j in range(l):
            matrix[i * l + j, j * n + i] = 1
    return matrix


def represent(module: CoefficientModule, e: GroupRingElement) -> np.ndarray:
    return module.represent(e)


def parse_coefficient(text: str, params: Optional[GroupParams] = None) -> CoefficientModule:
    """Parse a coefficient expression

    Args:
        text: Expression in the grammar of this module
        params: If given, the module is checked against the relations

    Raises:
        CoefficientSyntaxError: On malformed expressions
        InvalidCharacter: For a character violating the relations
        InvalidModule: For invalid moduli or failed relations
    """
    source = text.strip()
    if source == "Z":
        module = module_trivial_Z()
    elif source.startswith("Zeta:"):
        try:
            signs = parse_ints(source[len("Zeta:"):], count=3)
        except ValueError as err:
            raise CoefficientSyntaxError(f"Invalid character in '{text}': {err}")
        module = module_character(Character(*signs), params)
    elif source.startswith("Zp:"):
        try:
            (p,) = parse_ints(source[len("Zp:"):], count=1)
        except ValueError as err:
            raise CoefficientSyntaxError(f"Invalid modulus in '{text}': {err}")
        module = module_Zp(p)
    elif source.startswith("tensor(") and source.endswith(")"):
        try:
            args = split_arguments(source[len("tensor("):-1])
        except ValueError as err:
            raise CoefficientSyntaxError(str(err))
        if len(args) != 2:
            raise CoefficientSyntaxError(f"tensor takes two arguments, got {len(args)} in '{text}'")
        module = tensor(parse_coefficient(args[0], params), parse_coefficient(args[1], params))
    else:
        raise CoefficientSyntaxError(f"Unknown coefficient expression '{text}'")
    if params is not None:
        module.check(params)
    logger.debug(f"Parsed coefficient '{text}' as {module!r}")
    return module
