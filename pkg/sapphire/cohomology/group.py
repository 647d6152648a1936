# -*- coding: utf-8 -*-
"""Normal forms and multiplication in the sapphire groups

The group is presented as ::

    G = < a1, b1, a2 | a1 b1 a1^-1 = b1^-1,
                       a2^2 = a1^(2r) b1^s,
                       a2 a1^(2t) b1^u a2^-1 = b1^-u a1^-2t >

The subgroup N generated by ``x = a1^2`` and ``y = b1`` is free abelian of
rank two and normal. Every element has a unique first normal form
``w x^i y^j`` where ``w`` alternates between ``a1`` and ``a2``.
"""
from typing import Iterable, Iterator, Optional, Tuple
from collections import namedtuple
import logging
import re

import numpy as np

from .errors import RejectedParams, InvalidCharacter
from .utils import power

logger = logging.getLogger(__name__)

A1 = "a1"
B1 = "b1"
A2 = "a2"
V = "v"
GENERATORS = (A1, B1, A2)

#: A letter is a generator name with exponent +1 or -1
Letter = Tuple[str, int]
Word = Tuple[Letter, ...]

FACTOR_PATTERN = re.compile(r"^(a1|b1|a2|x|y|v)(?:\^\(?(-?\d+)\)?)?$")


def _syllable(gen: str, exponent: int) -> Word:
    sign = 1 if exponent > 0 else -1
    return ((gen, sign),) * abs(exponent)


def invert_word(word: Iterable[Letter]) -> Word:
    """Formal inverse of a word"""
    return tuple((gen, -exp) for gen, exp in reversed(tuple(word)))


def format_word(word: Iterable[Letter]) -> str:
    """Render a word as ``a2*a1^-1*b1``; the empty word is ``1``"""
    letters = [gen if exp == 1 else f"{gen}^{exp}" for gen, exp in word]
    return "*".join(letters) if letters else "1"


class GroupParams(namedtuple("GroupParams", ["r", "s", "t", "u"])):
    """Validated gluing parameters of a sapphire group

    Args:
        r, s, t, u: Integers with ``r*s*t*u != 0``, ``(r*u - s*t)^2 = 1``,
            ``r > 0`` and ``t < 0``.

    Raises:
        RejectedParams: If any of the conditions is violated. The exception
            carries the reason code of the first violated condition.
    """
    __slots__ = ()

    def __new__(cls, r: int, s: int, t: int, u: int) -> "GroupParams":
        r, s, t, u = (int(p) for p in (r, s, t, u))
        if r * s * t * u == 0:
            raise RejectedParams(
                "zero-parameter",
                f"r*s*t*u must not vanish, got ({r},{s},{t},{u})")
        det = r * u - s * t
        if det * det != 1:
            raise RejectedParams(
                "unimodularity-violation",
                f"(ru - st)^2 must equal 1, got ru - st = {det}")
        if r <= 0 or t >= 0:
            raise RejectedParams(
                "unnormalized-signs",
                f"Expected r > 0 and t < 0, got r={r} and t={t}")
        return super().__new__(cls, r, s, t, u)

    def __str__(self) -> str:
        return f"({self.r},{self.s},{self.t},{self.u})"

    @property
    def det(self) -> int:
        """Determinant ``ru - st``, either 1 or -1"""
        return self.r * self.u - self.s * self.t

    @property
    def s_even(self) -> bool:
        return self.s % 2 == 0

    def conjugation_matrix(self, gen: str) -> np.ndarray:
        """Matrix of ``n -> g n g^-1`` on N for a generator g

        Exponent pairs ``(m, n)`` of ``x^m y^n`` are column vectors.

        Args:
            gen: One of ``a1``, ``b1``, ``a2`` or ``v``

        Return:
            2x2 integer matrix. Conjugation by ``a1`` and ``a2`` are
            involutions, so the same matrices describe conjugation by the
            inverses.
        """
        r, s, t, u = self
        trace = r * u + s * t
        if gen == A1:
            rows = [[1, 0], [0, -1]]
        elif gen == B1:
            rows = [[1, 0], [0, 1]]
        elif gen == A2:
            d = self.det
            rows = [[d * trace, -2 * d * r * t], [2 * d * s * u, -d * trace]]
        elif gen == V:
            return self.theta_matrix
        else:
            raise ValueError(f"Unknown generator '{gen}'")
        return np.array(rows, dtype=object)

    @property
    def theta_matrix(self) -> np.ndarray:
        """Matrix of conjugation by ``v = a1^-1 a2`` on N"""
        return self.conjugation_matrix(A1).dot(self.conjugation_matrix(A2))

    def theta(self, k: int) -> np.ndarray:
        """Matrix of conjugation by ``v^k`` on N

        Entries grow exponentially in ``|k|``; arithmetic is exact.
        """
        base = self.theta_matrix
        if k < 0:
            # inverse of a1-conj * a2-conj is a2-conj * a1-conj
            base = self.conjugation_matrix(A2).dot(self.conjugation_matrix(A1))
        result = np.eye(2, dtype=object)
        for _ in range(abs(k)):
            result = result.dot(base)
        return result

    def square(self, gen: str) -> Tuple[int, int]:
        """Exponent pair of ``gen^2`` in N"""
        if gen == A1:
            return 1, 0
        if gen == A2:
            return self.r, self.s
        raise ValueError(f"Square of '{gen}' is not a fold of the alternating word")

    @property
    def relators(self) -> Tuple[Word, Word, Word]:
        """The three defining relators as words of unit letters"""
        r, s, t, u = self
        r1 = ((A1, 1), (B1, 1), (A1, -1), (B1, 1))
        r2 = _syllable(A1, 2 * r) + _syllable(B1, s) + _syllable(A2, -2)
        r3 = (((A2, 1),) + _syllable(A1, 2 * t) + _syllable(B1, u)
              + ((A2, -1),) + _syllable(A1, 2 * t) + _syllable(B1, u))
        return r1, r2, r3


def validate_params(r: int, s: int, t: int, u: int) -> GroupParams:
    """Validate gluing parameters

    Raises:
        RejectedParams: With reason ``zero-parameter``,
            ``unimodularity-violation`` or ``unnormalized-signs``
    """
    return GroupParams(r, s, t, u)


class GroupElement(namedtuple("GroupElement", ["word", "i", "j"])):
    """Element ``w x^i y^j`` in first normal form

    Attributes:
        word: Alternating tuple over ``"a1"`` and ``"a2"``
        i: Exponent of ``x = a1^2``
        j: Exponent of ``y = b1``

    Instances are only meaningful together with the :class:`SapphireGroup`
    that created them.
    """
    __slots__ = ()

    def __str__(self) -> str:
        factors = list(self.word)
        factors.extend(f for f in (power("x", self.i), power("y", self.j)) if f)
        return "*".join(factors) if factors else "1"

    @property
    def sort_key(self) -> tuple:
        """Key of the canonical order: word length, word, i, j"""
        return len(self.word), self.word, self.i, self.j

    @property
    def is_identity(self) -> bool:
        return not self.word and self.i == 0 and self.j == 0


class NF4Element(namedtuple("NF4Element", ["k", "m", "n", "eps"])):
    """Element ``v^k x^m y^n a2^eps`` in fourth normal form"""
    __slots__ = ()


class Character(namedtuple("Character", ["ea1", "eb1", "ea2"])):
    """Homomorphism of G onto {+1, -1}, given by the generator images"""
    __slots__ = ()

    def check(self, params: GroupParams) -> "Character":
        """Verify the defining relations under this assignment

        Only ``a2^2 = a1^(2r) b1^s`` constrains the signs: it requires
        ``eb1^s = 1``.

        Return:
            self

        Raises:
            InvalidCharacter: If a value is not a sign or a relation fails
        """
        if any(e not in (1, -1) for e in self):
            raise InvalidCharacter(f"Character values must be +1 or -1, got {tuple(self)}")
        if self.eb1 == -1 and not params.s_even:
            raise InvalidCharacter(
                f"Image -1 of b1 requires s to be even, got s={params.s}")
        return self

    def of_generator(self, gen: str) -> int:
        return {A1: self.ea1, B1: self.eb1, A2: self.ea2}[gen]

    def value(self, g: GroupElement) -> int:
        """Image of a group element; x is always sent to +1"""
        sign = 1
        for letter in g.word:
            sign *= self.of_generator(letter)
        if g.j % 2:
            sign *= self.eb1
        return sign

    @property
    def is_trivial(self) -> bool:
        return self == TRIVIAL_CHARACTER


TRIVIAL_CHARACTER = Character(1, 1, 1)
ETA1 = Character(1, 1, -1)
ETA2 = Character(-1, 1, 1)
ETA3 = Character(-1, 1, -1)


class SapphireGroup(object):
    """Exact arithmetic in the group G(r, s, t, u)

    Multiplication pushes the N-part of the left factor to the right through
    each letter of the right factor using the conjugation matrices, and folds
    ``a1 a1 -> x`` and ``a2 a2 -> x^r y^s``.

    Args:
        params: Validated gluing parameters
    """
    def __init__(self, params: GroupParams) -> None:
        self.params = params
        self._conj = {
            gen: tuple(tuple(int(c) for c in row)
                       for row in params.conjugation_matrix(gen))
            for gen in (A1, A2)
        }
        self._square = {gen: params.square(gen) for gen in (A1, A2)}
        self.identity = GroupElement((), 0, 0)
        logger.debug(f"Created sapphire group for params {params}")

    def __repr__(self) -> str:
        return f"SapphireGroup{self.params}"

    def __eq__(self, other) -> bool:
        return isinstance(other, SapphireGroup) and self.params == other.params

    def __hash__(self) -> int:
        return hash(self.params)

    def element(self, word: Tuple[str, ...] = (), i: int = 0, j: int = 0) -> GroupElement:
        """Create an element from normal form data

        Raises:
            ValueError: If *word* is not alternating over a1, a2
        """
        word = tuple(word)
        for pos, letter in enumerate(word):
            if letter not in (A1, A2):
                raise ValueError(f"Invalid letter '{letter}' in normal form word")
            if pos and word[pos - 1] == letter:
                raise ValueError(f"Normal form word {word} is not alternating")
        return GroupElement(word, int(i), int(j))

    def generator(self, name: str) -> GroupElement:
        """Get one of ``a1``, ``b1``, ``a2``, ``x``, ``y`` or ``v``"""
        if name in (A1, A2):
            return GroupElement((name,), 0, 0)
        if name in (B1, "y"):
            return GroupElement((), 0, 1)
        if name == "x":
            return GroupElement((), 1, 0)
        if name == V:
            return self.evaluate(((A1, -1), (A2, 1)))
        raise ValueError(f"Unknown generator '{name}'")

    def _push(self, word: list, m: int, n: int, letter: str) -> Tuple[int, int]:
        ((p, q), (r, s)) = self._conj[letter]
        m, n = p * m + q * n, r * m + s * n
        if word and word[-1] == letter:
            word.pop()
            dm, dn = self._square[letter]
            return m + dm, n + dn
        word.append(letter)
        return m, n

    def _apply(self, word: list, m: int, n: int, gen: str, exp: int) -> Tuple[int, int]:
        if gen == B1:
            return m, n + exp
        if gen not in self._conj:
            raise ValueError(f"Unknown generator '{gen}'")
        dm, dn = self._square[gen]
        for _ in range(abs(exp)):
            m, n = self._push(word, m, n, gen)
            if exp < 0:
                m, n = m - dm, n - dn
        return m, n

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Product ``g*h`` in normal form"""
        word = list(g.word)
        m, n = g.i, g.j
        for letter in h.word:
            m, n = self._push(word, m, n, letter)
        return GroupElement(tuple(word), m + h.i, n + h.j)

    def inverse(self, g: GroupElement) -> GroupElement:
        word = []
        m, n = -g.i, -g.j
        for letter in reversed(g.word):
            m, n = self._apply(word, m, n, letter, -1)
        return GroupElement(tuple(word), m, n)

    def power(self, g: GroupElement, k: int) -> GroupElement:
        """Integer power of an element by repeated squaring"""
        if k < 0:
            g, k = self.inverse(g), -k
        result = self.identity
        while k:
            if k & 1:
                result = self.multiply(result, g)
            g = self.multiply(g, g)
            k >>= 1
        return result

    def evaluate(self, word: Iterable[Letter]) -> GroupElement:
        """Evaluate a word over a1, b1, a2 (arbitrary integer exponents)"""
        w = []
        m = n = 0
        for gen, exp in word:
            m, n = self._apply(w, m, n, gen, exp)
        return GroupElement(tuple(w), m, n)

    def parse_word(self, text: str) -> Word:
        """Parse a product like ``a2*x^-1*y^2`` into unit letters

        Factors are ``a1``, ``b1``, ``a2``, ``x``, ``y`` and ``v`` with an
        optional integer exponent ``^k``, joined by ``*``. ``1`` is the empty
        word.
        """
        text = text.strip()
        if text in ("", "1"):
            return ()
        word = ()
        for factor in text.split("*"):
            match = FACTOR_PATTERN.match(factor.strip())
            if not match:
                raise ValueError(f"Invalid factor '{factor}' in '{text}'")
            name, exponent = match.group(1), int(match.group(2) or 1)
            if name in GENERATORS:
                word += _syllable(name, exponent)
            elif name == "x":
                word += _syllable(A1, 2 * exponent)
            elif name == "y":
                word += _syllable(B1, exponent)
            else:
                unit = ((A1, -1), (A2, 1)) if exponent > 0 else ((A2, -1), (A1, 1))
                word += unit * abs(exponent)
        return word

    def parse(self, text: str) -> GroupElement:
        """Evaluate the product notation of :meth:`parse_word`"""
        return self.evaluate(self.parse_word(text))

    def conjugate_by_generator(self, gen: str, pair: Tuple[int, int]) -> Tuple[int, int]:
        """Image of ``x^m y^n`` under conjugation by a1, a2 or v

        Args:
            gen: ``"a1"``, ``"a2"`` or ``"v"``
            pair: Exponents ``(m, n)``

        Return:
            Exponent pair of ``g x^m y^n g^-1``
        """
        if gen not in (A1, A2, V):
            raise ValueError(f"Conjugation is defined for a1, a2 and v, got '{gen}'")
        image = self.params.conjugation_matrix(gen).dot(np.array(pair, dtype=object))
        return int(image[0]), int(image[1])

    def to_nf4(self, g: GroupElement) -> NF4Element:
        """Fourth normal form ``v^k x^m y^n a2^eps``

        Word parity is a homomorphism onto Z/2, so ``eps`` is the parity of
        the normal form word. The remaining even word is ``(a1 a2)^k`` or
        ``(a2 a1)^-k``, the word of ``v^k``.
        """
        eps = len(g.word) % 2
        h = self.multiply(g, self.inverse(self.generator(A2))) if eps else g
        half = len(h.word) // 2
        k = half if h.word and h.word[0] == A1 else -half
        rest = self.multiply(self.power(self.generator(V), -k), h)
        if rest.word:
            raise RuntimeError(f"Failed to split {g} into v^{k} and an element of N")
        return NF4Element(k, rest.i, rest.j, eps)

    def from_nf4(self, e: NF4Element) -> GroupElement:
        g = self.multiply(self.power(self.generator(V), e.k),
                          GroupElement((), e.m, e.n))
        if e.eps:
            g = self.multiply(g, self.generator(A2))
        return g

    def character_value(self, chi: Character, g: GroupElement) -> int:
        return chi.value(g)

    def word_representative(self, g: GroupElement) -> Word:
        """Word ``w a1^(2i) b1^j`` in unit letters evaluating to g"""
        return (tuple((letter, 1) for letter in g.word)
                + _syllable(A1, 2 * g.i) + _syllable(B1, g.j))

    def short_word(self, g: GroupElement) -> Word:
        """Shorter of the normal form word of g and the inverted one of g^-1

        Ties keep :meth:`word_representative`.
        """
        direct = self.word_representative(g)
        inverted = invert_word(self.word_representative(self.inverse(g)))
        return inverted if len(inverted) < len(direct) else direct

    def random_word(self, rng: np.random.Generator, max_length: int = 12) -> Word:
        """Random word of unit letters with length at most *max_length*"""
        length = int(rng.integers(0, max_length + 1))
        return tuple((GENERATORS[int(rng.integers(0, 3))], 1 if rng.integers(0, 2) else -1)
                     for _ in range(length))

    def random_element(self, rng: np.random.Generator, max_length: int = 12) -> GroupElement:
        return self.evaluate(self.random_word(rng, max_length))

    def iter_words(self, length: int) -> Iterator[Word]:
        """Iterate over all words of unit letters of exactly *length* letters"""
        letters = [(gen, exp) for gen in GENERATORS for exp in (1, -1)]
        if length == 0:
            yield ()
            return
        for prefix in self.iter_words(length - 1):
            for letter in letters:
                yield prefix + (letter,)
