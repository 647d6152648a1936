# -*- coding: utf-8 -*-
"""Integral group ring of a sapphire group and Fox calculus

Text grammar of ring elements (used by :meth:`GroupRingElement.parse` and by
``str``)::

    element := term (("+" | "-") term)*
    term    := ["-"] [integer "*"] monomial | ["-"] integer
    monomial:= factor ("*" factor)*
    factor  := ("a1" | "b1" | "a2" | "x" | "y" | "v") ["^" integer]

Rendering always prints monomials in first normal form ``w*x^i*y^j`` and
terms in the canonical order of group elements.
"""
from typing import Dict, Iterable, Iterator, Tuple, Union
import re

from .errors import AugmentationNonzero
from .group import SapphireGroup, GroupElement, Letter, GENERATORS, A1, B1, A2
from .utils import signed_sum


class GroupRingElement(object):
    """Finite integer combination of group elements

    Args:
        group: Group whose ring this element belongs to
        terms: Mapping or iterable of ``(GroupElement, int)`` pairs. Repeated
            elements are summed; zero coefficients are dropped.
    """
    __slots__ = ("group", "_terms")

    def __init__(self,
                 group: SapphireGroup,
                 terms: Union[Dict[GroupElement, int],
                              Iterable[Tuple[GroupElement, int]], None] = None) -> None:
        self.group = group
        acc = dict()
        if terms is not None:
            pairs = terms.items() if isinstance(terms, dict) else terms
            for g, c in pairs:
                acc[g] = acc.get(g, 0) + int(c)
        self._terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def zero(cls, group: SapphireGroup) -> "GroupRingElement":
        return cls(group)

    @classmethod
    def one(cls, group: SapphireGroup) -> "GroupRingElement":
        return cls(group, {group.identity: 1})

    @classmethod
    def monomial(cls, group: SapphireGroup, g: GroupElement, coeff: int = 1) -> "GroupRingElement":
        return cls(group, {g: coeff})

    @classmethod
    def parse(cls, group: SapphireGroup, text: str) -> "GroupRingElement":
        """Parse the text grammar described in the module documentation

        Raises:
            ValueError: On malformed input
        """
        source = text.replace(" ", "")
        if not source:
            raise ValueError("Empty ring element")
        # split at signs that do not belong to an exponent
        pieces = re.split(r"(?<!\^)(?=[+-])", source)
        terms = []
        for piece in pieces:
            if not piece:
                continue
            sign = -1 if piece[0] == "-" else 1
            body = piece.lstrip("+-")
            if not body:
                raise ValueError(f"Dangling sign in '{text}'")
            head, _, tail = body.partition("*")
            if head.isdigit():
                coeff = int(head)
                monomial = tail or "1"
            else:
                coeff = 1
                monomial = body
            terms.append((group.parse(monomial), sign * coeff))
        return cls(group, terms)

    def __str__(self) -> str:
        return signed_sum((c, str(g)) for g, c in self.terms)

    def __repr__(self) -> str:
        return f"GroupRingElement({self})"

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[GroupElement, int]]:
        yield from self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, GroupRingElement):
            return self.group == other.group and self._terms == other._terms
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {self.group.identity: other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other) -> "GroupRingElement":
        if isinstance(other, GroupRingElement):
            if other.group != self.group:
                raise ValueError(f"Ring elements of {self.group} and {other.group} do not mix")
            return other
        if isinstance(other, int):
            return GroupRingElement(self.group, {self.group.identity: other})
        if isinstance(other, GroupElement):
            return GroupRingElement(self.group, {other: 1})
        raise TypeError(f"Cannot combine ring element with {type(other).__name__}")

    def __add__(self, other) -> "GroupRingElement":
        other = self._coerce(other)
        terms = dict(self._terms)
        for g, c in other._terms.items():
            terms[g] = terms.get(g, 0) + c
        return GroupRingElement(self.group, terms)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other) -> "GroupRingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GroupRingElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        multiply = self.group.multiply
        terms = dict()
        for g, c in self._terms.items():
            for h, d in other._terms.items():
                gh = multiply(g, h)
                terms[gh] = terms.get(gh, 0) + c * d
        return GroupRingElement(self.group, terms)

    def __rmul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return self.scale(other)
        return self._coerce(other) * self

    def scale(self, c: int) -> "GroupRingElement":
        """Multiply all coefficients by an integer"""
        return GroupRingElement(self.group, {g: c * d for g, d in self._terms.items()})

    @property
    def terms(self) -> list:
        """Terms as ``(GroupElement, coefficient)`` pairs in canonical order"""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key)

    def coefficient(self, g: GroupElement) -> int:
        return self._terms.get(g, 0)

    def augmentation(self) -> int:
        """Sum of coefficients"""
        return sum(self._terms.values())

    def antipode(self) -> "GroupRingElement":
        """Apply ``g -> g^-1`` termwise, keeping coefficients"""
        inverse = self.group.inverse
        return GroupRingElement(self.group, {inverse(g): c for g, c in self._terms.items()})


def _letter_elements(group: SapphireGroup) -> Dict[Letter, GroupElement]:
    return {(gen, exp): group.evaluate(((gen, exp),))
            for gen in GENERATORS for exp in (1, -1)}


def fox_gradient(group: SapphireGroup,
                 word: Iterable[Letter]) -> Dict[str, GroupRingElement]:
    """Fox derivatives of a word with respect to all three generators

    Uses ``d(uv)/dg = du/dg + u dv/dg`` letter by letter: a letter ``g``
    contributes its prefix, a letter ``g^-1`` contributes minus its prefix
    including the letter.

    Args:
        group: Group in which prefixes are evaluated
        word: Letters ``(generator, exponent)``; exponents other than +1/-1
            are expanded

    Return:
        Dictionary from generator name to derivative
    """
    letters = _letter_elements(group)
    acc = {gen: dict() for gen in GENERATORS}
    prefix = group.identity
    for gen, exp in word:
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            if step > 0:
                terms = acc[gen]
                terms[prefix] = terms.get(prefix, 0) + 1
                prefix = group.multiply(prefix, letters[(gen, 1)])
            else:
                prefix = group.multiply(prefix, letters[(gen, -1)])
                terms = acc[gen]
                terms[prefix] = terms.get(prefix, 0) - 1
    return {gen: GroupRingElement(group, terms) for gen, terms in acc.items()}


def fox_derivative(group: SapphireGroup, word: Iterable[Letter], gen: str) -> GroupRingElement:
    """Fox derivative of a word with respect to one generator"""
    if gen not in GENERATORS:
        raise ValueError(f"Unknown generator '{gen}'")
    return fox_gradient(group, word)[gen]


def fox_power(group: SapphireGroup, gen: str, n: int) -> GroupRingElement:
    """Fox derivative of ``gen^n`` with respect to ``gen``

    Return:
        ``1 + g + ... + g^(n-1)`` for positive n, ``0`` for n = 0 and
        ``-(g^-1 + ... + g^n)`` for negative n, so that
        ``g^n - 1 = fox_power * (g - 1)``.
    """
    g = group.generator(gen)
    if n >= 0:
        exponents, sign = range(0, n), 1
    else:
        exponents, sign = range(n, 0), -1
    return GroupRingElement(group, [(group.power(g, k), sign) for k in exponents])


def fox_decompose(e: GroupRingElement) -> Tuple[GroupRingElement, GroupRingElement, GroupRingElement]:
    """Write an augmentation-zero element as ``A(a1-1) + B(b1-1) + C(a2-1)``

    Each term ``c*g`` contributes ``c`` times the Fox gradient of
    :meth:`~sapphire.cohomology.group.SapphireGroup.short_word` of g.

    Raises:
        AugmentationNonzero: If the coefficients of *e* do not sum to zero
    """
    eps = e.augmentation()
    if eps != 0:
        raise AugmentationNonzero(f"Cannot decompose {e}: augmentation is {eps}")
    group = e.group
    parts = {gen: GroupRingElement.zero(group) for gen in GENERATORS}
    for g, c in e.terms:
        gradient = fox_gradient(group, group.short_word(g))
        for gen in GENERATORS:
            if gradient[gen]:
                parts[gen] = parts[gen] + gradient[gen].scale(c)
    return parts[A1], parts[B1], parts[A2]


def recombine(parts: Tuple[GroupRingElement, GroupRingElement, GroupRingElement]) -> GroupRingElement:
    """Evaluate ``A(a1-1) + B(b1-1) + C(a2-1)``"""
    first = parts[0]
    group = first.group
    return sum((part * (GroupRingElement.monomial(group, group.generator(gen)) - 1)
                for part, gen in zip(parts, GENERATORS)),
               GroupRingElement.zero(group))
