# -*- coding: utf-8 -*-
"""Structural checks and closed-form comparisons over a parameter matrix"""
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple
from collections import namedtuple
from itertools import product
from math import gcd
import logging

import numpy as np

from .errors import CohomologyError
from .group import (GroupParams, Character, ETA1, ETA2, ETA3, GENERATORS,
                    validate_params)
from .group_ring import GroupRingElement, fox_decompose, recombine
from .resolution import Resolution, FreeVector
from .coefficients import (CoefficientModule, module_trivial_Z, module_character,
                           module_Zp, tensor)
from .homology import AbelianInvariants, CohomologyClass
from .linalg import int_matrix, kernel_basis, image_generators, Subquotient, matmul
from .products import ProductCalculator

logger = logging.getLogger(__name__)

PARAMETER_MATRIX = ((1, 2, -1, -1), (1, 1, -2, -1), (3, 2, -1, -1), (1, 1, -5, -4))
ETA_B1 = Character(1, -1, 1)
ODD_PRIMES = (3, 5)


class CheckResult(namedtuple("CheckResult", ["name", "params", "passed", "detail"])):
    """Outcome of one verification check"""
    __slots__ = ()

    def as_dict(self) -> dict:
        return {"name": self.name,
                "params": list(self.params) if self.params else None,
                "passed": self.passed,
                "detail": self.detail}


def _groups(*orders: Sequence[int]) -> List[AbelianInvariants]:
    return [AbelianInvariants.from_cyclic(o) for o in orders]


def expected_integral_cohomology(params: GroupParams) -> List[AbelianInvariants]:
    """``H^*(G;Z)``; the torsion of ``H^2`` equals that of ``H_1``"""
    return _groups([0], [], expected_h1_torsion(params), [0])


def expected_h1_torsion(params: GroupParams) -> List[int]:
    order = 4 * abs(params.t)
    return [order, 2, 2] if params.s_even else [order, 4]


def expected_integral_homology(params: GroupParams) -> List[AbelianInvariants]:
    return _groups([0], expected_h1_torsion(params), [], [0])


def expected_twisted_cohomology(params: GroupParams, chi: Character) -> Optional[List[AbelianInvariants]]:
    """Closed forms for the nontrivial characters, ``None`` if there is none"""
    r, s, t, u = params
    if chi == ETA_B1:
        return _groups([], [2], [2, 2], [2]) if params.s_even else None
    if chi == ETA1:
        return _groups([], [2], [2 * r, 2] if params.s_even else [4 * r], [2])
    if chi == ETA2:
        return _groups([], [2], [2 * abs(u), 2] if params.s_even else [4 * abs(u)], [2])
    if chi == ETA3:
        return _groups([], [0, 2], [0, abs(s)], [2])
    return None


def expected_mod_p_cohomology(params: GroupParams, p: int) -> List[AbelianInvariants]:
    middle = gcd(p, params.t)
    return _groups([p], [middle], [middle], [p])


def brute_force_homology_order(incoming: np.ndarray, outgoing: np.ndarray, modulus: int) -> int:
    """Order of ``ker outgoing / im incoming`` over Z/modulus by enumeration"""
    n = outgoing.shape[1]
    kernel = 0
    for x in product(range(modulus), repeat=n):
        if all(sum(outgoing[i, j] * x[j] for j in range(n)) % modulus == 0
               for i in range(outgoing.shape[0])):
            kernel += 1
    image = set()
    for y in product(range(modulus), repeat=incoming.shape[1]):
        image.add(tuple(sum(incoming[i, j] * y[j] for j in range(incoming.shape[1])) % modulus
                        for i in range(n)))
    return kernel // len(image)


def lifted_homology_order(incoming: np.ndarray, outgoing: np.ndarray, modulus: int) -> int:
    """Order of the same group computed by lifted Smith normal forms"""
    lattice = Subquotient(kernel_basis(outgoing, modulus), image_generators(incoming, modulus))
    return AbelianInvariants.from_cyclic(lattice.orders).order


class VerificationSuite(object):
    """Runs all checks on a list of parameters

    Args:
        matrix: Parameter quadruples to check
        seed: Seed of the random generator used for sampled checks
        samples: Number of random elements for the contracting homotopy
        triples: Number of random word triples for the group law
        inject_fault: Flip the sign of ``d2[alpha1, rho1]`` in every
            resolution, which must make the suite fail
    """
    def __init__(self,
                 matrix: Iterable[Sequence[int]] = PARAMETER_MATRIX,
                 seed: int = 0,
                 samples: int = 200,
                 triples: int = 500,
                 inject_fault: bool = False) -> None:
        self.matrix = [validate_params(*p) for p in matrix]
        self.seed = seed
        self.samples = samples
        self.triples = triples
        self.inject_fault = inject_fault

    def _resolution(self, params: GroupParams) -> Resolution:
        resolution = Resolution(params)
        if self.inject_fault:
            resolution = resolution.with_flipped_sign(2, 0, 0)
        return resolution

    def run(self) -> List[CheckResult]:
        results = []
        for params in self.matrix:
            rng = np.random.default_rng(self.seed)
            resolution = self._resolution(params)
            context = _Context(params, resolution, rng, self)
            for name, check in context.checks():
                results.append(self._run_check(name, params, check))
        rng = np.random.default_rng(self.seed)
        results.append(self._run_check("torsion-oracle", None,
                                       lambda: check_torsion_oracle(rng)))
        failed = sum(1 for r in results if not r.passed)
        logger.info(f"Verification finished: {len(results) - failed} passed, {failed} failed")
        return results

    @staticmethod
    def _run_check(name: str, params: Optional[GroupParams],
                   check: Callable[[], Tuple[bool, str]]) -> CheckResult:
        try:
            passed, detail = check()
        except (CohomologyError, ArithmeticError, ValueError, KeyError) as err:
            passed, detail = False, f"{type(err).__name__}: {err}"
        level = logging.INFO if passed else logging.WARNING
        logger.log(level, f"Check {name} for {params}: {'passed' if passed else 'FAILED'} {detail}")
        return CheckResult(name, tuple(params) if params else None, passed, detail)


def check_torsion_oracle(rng: np.random.Generator, count: int = 20) -> Tuple[bool, str]:
    """Lifted homology against enumeration for random complexes mod 2, 3 and 4

    The complexes are ``Z_m^2 -> Z_m^3 -> Z_m^2``; the second map is chosen
    to vanish on the image of the first.
    """
    for modulus in (2, 3, 4):
        for _ in range(count):
            incoming = int_matrix(rng.integers(0, modulus, size=(3, 2)).tolist())
            # rows of the outgoing map are orthogonal to the columns of incoming
            annihilator = kernel_basis(incoming.T.copy(), modulus)
            picks = rng.integers(0, 3, size=(2, annihilator.shape[1]))
            outgoing = matmul(int_matrix(picks.tolist(), shape=(2, annihilator.shape[1])),
                              annihilator.T.copy())
            expected = brute_force_homology_order(incoming, outgoing, modulus)
            computed = lifted_homology_order(incoming, outgoing, modulus)
            if expected != computed:
                return False, f"mod {modulus}: enumeration {expected}, lifted {computed}"
    return True, f"{3 * count} random complexes agree"


class _Context(object):
    """Checks bound to one parameter quadruple"""

    def __init__(self, params: GroupParams, resolution: Resolution,
                 rng: np.random.Generator, suite: VerificationSuite) -> None:
        self.params = params
        self.resolution = resolution
        self.group = resolution.group
        self.rng = rng
        self.suite = suite
        self.calc = ProductCalculator(resolution)

    def checks(self) -> Iterator[Tuple[str, Callable[[], Tuple[bool, str]]]]:
        yield "group-law", self.group_law
        yield "chain-complex", self.chain_complex
        yield "kernel-equations", self.kernel_equations
        yield "kernel-augmentation", self.kernel_augmentation
        yield "relator-jacobian", self.relator_jacobian
        yield "contracting-homotopy", self.contracting_homotopy
        yield "fox-decomposition", self.fox_decomposition
        yield "diagonal-degree-one", self.diagonal_degree_one
        yield "handel-diagonal", self.handel_diagonal
        yield "fundamental-cycle", self.fundamental_cycle
        yield "coefficient-complexes", self.coefficient_complexes
        yield "integral-cohomology", self.integral_cohomology
        yield "integral-homology", self.integral_homology
        yield "twisted-cohomology", self.twisted_cohomology
        yield "mod-p-cohomology", self.mod_p_cohomology
        yield "duality-numerics", self.duality_numerics
        yield "duality-isomorphisms", self.duality_isomorphisms
        yield "graded-commutativity", self.graded_commutativity
        if not self.params.s_even:
            yield "eta3-products", self.eta3_products
            yield "eta1-eta2-products", self.eta1_eta2_products
        if any(self.params.t % p == 0 for p in ODD_PRIMES):
            yield "mod-p-ring", self.mod_p_ring

    def modules(self) -> List[CoefficientModule]:
        modules = [module_trivial_Z()]
        characters = [ETA1, ETA2, ETA3] + ([ETA_B1] if self.params.s_even else [])
        modules.extend(module_character(chi, self.params) for chi in characters)
        modules.append(module_Zp(5))
        return modules

    def group_law(self) -> Tuple[bool, str]:
        group = self.group
        for _ in range(self.suite.triples):
            words = [group.random_word(self.rng, 12) for _ in range(3)]
            g, h, k = (group.evaluate(w) for w in words)
            if group.multiply(group.multiply(g, h), k) != group.multiply(g, group.multiply(h, k)):
                return False, f"associativity fails on {g}, {h}, {k}"
            if group.evaluate(words[0] + words[1]) != group.multiply(g, h):
                return False, f"evaluation is not multiplicative on {g}, {h}"
            if group.multiply(g, group.inverse(g)) != group.identity:
                return False, f"inverse fails on {g}"
        return True, f"{self.suite.triples} triples"

    def chain_complex(self) -> Tuple[bool, str]:
        return self.resolution.is_chain_complex(), "d1 d2 = 0, d2 d3 = 0, eps d1 = 0"

    def kernel_equations(self) -> Tuple[bool, str]:
        equations = self.resolution.kernel_equations()
        return not any(equations), "X0, Y0, Z0 solve the kernel system"

    def kernel_augmentation(self) -> Tuple[bool, str]:
        values = [e.augmentation() for e in self.resolution.kernel_generator]
        return not any(values), f"augmentations {values}"

    def relator_jacobian(self) -> Tuple[bool, str]:
        same = self.resolution.relator_jacobian() == self.resolution.differential(2)
        return same, "closed forms of d2 match Fox derivatives of the relators"

    def contracting_homotopy(self) -> Tuple[bool, str]:
        group = self.group
        for _ in range(self.suite.samples):
            g = GroupRingElement.monomial(group, group.random_element(self.rng, 12))
            image = self.resolution.apply_differential(self.calc.diagonal.s0(g)).coords[0]
            if image + g.augmentation() != g:
                return False, f"d1 s0 + s-1 eps differs from the identity on {g}"
        return True, f"{self.suite.samples} random elements"

    def fox_decomposition(self) -> Tuple[bool, str]:
        group = self.group
        for _ in range(self.suite.samples // 4):
            terms = [(group.random_element(self.rng, 10), int(self.rng.integers(-3, 4)))
                     for _ in range(3)]
            e = GroupRingElement(group, terms)
            e = e - e.augmentation()
            if recombine(fox_decompose(e)) != e:
                return False, f"recombination fails on {e}"
        for entry in self.resolution.kernel_generator:
            e = entry.antipode()
            if recombine(fox_decompose(e)) != e:
                return False, f"recombination fails on {e}"
        return True, "decompositions recombine exactly"

    def diagonal_degree_one(self) -> Tuple[bool, str]:
        diagonal = self.calc.diagonal
        group = self.group
        for index, gen in enumerate(GENERATORS):
            left, right = diagonal.delta1(index)
            basis = FreeVector.basis(group, 1, index)
            if left.counit_right() != basis or right.counit_left() != basis:
                return False, f"counit fails on basis element {index}"
            boundary = self.resolution.differential(1)[0][index]
            chain = left.left_boundary(self.resolution) + right.right_boundary(self.resolution)
            if chain != diagonal.delta0_of(boundary):
                return False, f"Delta is not a chain map on generator {gen}"
        return True, "counits and boundaries in degree one"

    def handel_diagonal(self) -> Tuple[bool, str]:
        diagonal = self.calc.diagonal
        for index in range(3):
            if diagonal.handel_delta11(index) != diagonal.delta11(index):
                return False, f"recursion and closed form differ on rho{index + 1}"
        return True, "recursion matches closed form on rho1, rho2, rho3"

    def fundamental_cycle(self) -> Tuple[bool, str]:
        return not self.calc.diagonal.zeta_boundary02(), "bidegree (0,2) boundary vanishes"

    def coefficient_complexes(self) -> Tuple[bool, str]:
        for module in self.modules():
            if not self.calc.cohomology_group(module, 0).complex.is_complex():
                return False, f"cochain complex over {module} is not a complex"
            if not self.calc.homology_group(module, 0).complex.is_complex():
                return False, f"chain complex over {module} is not a complex"
        return True, "delta delta = 0 and d d = 0"

    def _compare(self, module: CoefficientModule, expected: List[AbelianInvariants],
                 homological: bool = False) -> Tuple[bool, str]:
        lookup = self.calc.homology_group if homological else self.calc.cohomology_group
        computed = [lookup(module, k).invariants for k in range(4)]
        text = ", ".join(str(g) for g in computed)
        if computed != expected:
            return False, f"{module}: computed ({text}), expected ({', '.join(map(str, expected))})"
        return True, f"{module}: ({text})"

    def integral_cohomology(self) -> Tuple[bool, str]:
        return self._compare(module_trivial_Z(), expected_integral_cohomology(self.params))

    def integral_homology(self) -> Tuple[bool, str]:
        return self._compare(module_trivial_Z(), expected_integral_homology(self.params), True)

    def twisted_cohomology(self) -> Tuple[bool, str]:
        details = []
        for chi in (ETA1, ETA2, ETA3, ETA_B1):
            expected = expected_twisted_cohomology(self.params, chi)
            if expected is None:
                continue
            passed, detail = self._compare(module_character(chi, self.params), expected)
            if not passed:
                return passed, detail
            details.append(detail)
        return True, "; ".join(details)

    def mod_p_cohomology(self) -> Tuple[bool, str]:
        details = []
        for p in ODD_PRIMES:
            passed, detail = self._compare(module_Zp(p), expected_mod_p_cohomology(self.params, p))
            if not passed:
                return passed, detail
            details.append(detail)
        return True, "; ".join(details)

    def duality_numerics(self) -> Tuple[bool, str]:
        for module in self.modules():
            for k in (2, 3):
                upper = self.calc.cohomology_group(module, k).invariants
                lower = self.calc.homology_group(module, 3 - k).invariants
                if upper != lower:
                    return False, f"H^{k} = {upper} but H_{3 - k} = {lower} over {module}"
        return True, "H^3 = H_0 and H^2 = H_1"

    def duality_isomorphisms(self) -> Tuple[bool, str]:
        for module in self.modules():
            for n in (2, 3):
                images = [self.calc.cap_with_zeta(n, g)
                          for g in self.calc.cohomology_group(module, n).generators]
                target = self.calc.homology_group(module, 3 - n)
                if not all(target.is_cycle(c) for c in images):
                    return False, f"capping in degree {n} over {module} misses the cycles"
                if not target.generates(images):
                    return False, f"capping in degree {n} over {module} is not onto"
            group = self.calc.cohomology_group(module, 2)
            coboundary = group.random_coboundary(self.rng)
            chain = self.calc.cap_with_zeta(2, group.class_of(coboundary))
            if not self.calc.homology_group(module, 1).is_zero(chain):
                return False, f"capping a coboundary over {module} gives a nonzero class"
        return True, "cap with the fundamental cycle is onto in degrees 2 and 3"

    def graded_commutativity(self) -> Tuple[bool, str]:
        pairs = [(ETA3, ETA3), (ETA1, ETA2)]
        for first, second in pairs:
            a = module_character(first, self.params)
            b = module_character(second, self.params)
            for u in self.calc.cohomology_group(a, 1).generators:
                for v in self.calc.cohomology_group(b, 1).generators:
                    direct = self.calc.cup_11(u, v)
                    swapped = self.calc.swap(self.calc.cup_11(v, u), a, b, sign=-1)
                    if direct.coordinates != swapped.coordinates:
                        return False, f"u v != -v u over {a} and {b}"
        return True, "u v = -v u on generators"

    def _class(self, module: CoefficientModule, degree: int, cocycle: Sequence[int]) -> CohomologyClass:
        return self.calc.cohomology_group(module, degree).class_of(cocycle)

    def eta3_products(self) -> Tuple[bool, str]:
        """Products over the character ``eta3`` for odd s"""
        r, s, t, u = self.params
        eta3 = module_character(ETA3, self.params)
        target = tensor(eta3, eta3)
        h2 = self.calc.cohomology_group(target, 2)
        h3 = self.calc.cohomology_group(target, 3)
        alpha2 = self._class(eta3, 1, (0, 0, 1))
        alpha12 = self._class(eta3, 1, (1, 0, 1))
        rho13 = self._class(eta3, 2, (1, 0, 1))
        rho2 = self._class(eta3, 2, (0, 1, 0))
        xi = (1, 0, u)
        identities = (
            ("[a2*]^2 = 2[r1*+u r3*]", self.calc.cup_11(alpha2, alpha2), (2, 0, 2 * u)),
            ("[a2*][a1*+a2*] = 2[r1*+u r3*]", self.calc.cup_11(alpha2, alpha12), (2, 0, 2 * u)),
            ("[a1*+a2*]^2 = 2t[r3*] - 2(r-1)[r1*+u r3*]", self.calc.cup_11(alpha12, alpha12),
             tuple(2 * t * x - 2 * (r - 1) * y for x, y in zip((0, 0, 1), xi))),
        )
        for name, result, expected in identities:
            if not h2.equal(result.cocycle, expected):
                return False, f"{name} fails: got {h2.render(result.cocycle)}"
        if not h2.is_zero((2, 1, 2 * u)):
            return False, "[2r1* + r2* + 2u r3*] is not zero"
        for left, right in ((alpha12, rho13), (alpha12, rho2), (alpha2, rho2)):
            if not self.calc.cup_12(left, right).is_zero:
                return False, f"{left.cocycle} x {right.cocycle} does not vanish"
        top = self.calc.cup_12(alpha2, rho13)
        if not h3.generates([top.cocycle]):
            return False, "[a2*][r1*+r3*] does not generate H^3"
        return True, "cup products over eta3 x eta3"

    def eta1_eta2_products(self) -> Tuple[bool, str]:
        """Products over ``eta1`` and ``eta2`` for odd s"""
        eta1 = module_character(ETA1, self.params)
        eta2 = module_character(ETA2, self.params)
        table = self.calc.product_table(eta1, eta2)
        if any(not e.is_zero for e in table.entries if e.bidegree == (1, 1)):
            return False, "a (1,1) product over eta1 and eta2 is nonzero"
        alpha2 = self._class(eta1, 1, (0, 0, 1))
        target = tensor(eta1, eta2)
        capped = self.calc.cap_11(alpha2, (0, 1, 0), eta2)
        if not self.calc.homology_group(target, 0).is_zero(capped):
            return False, "[a2*] cap [b1 (x) 1] is not zero"
        return True, "(1,1) products vanish and [a2*] cap [b1 (x) 1] = 0"

    def mod_p_ring(self) -> Tuple[bool, str]:
        r = self.params.r
        for p in ODD_PRIMES:
            if self.params.t % p:
                continue
            zp = module_Zp(p)
            h1 = self.calc.cohomology_group(zp, 1)
            h3 = self.calc.cohomology_group(tensor(zp, zp), 3)
            alpha = h1.class_of((1, 0, r))
            if not h1.generates([alpha.cocycle]):
                return False, f"[a1* + r a2*] does not generate H^1 mod {p}"
            w = (0, 0, 1)
            h1_lower = self.calc.homology_group(zp, 1)
            if not h1_lower.generates([w]):
                return False, f"[a2 (x) 1] does not generate H_1 mod {p}"
            capped = self.calc.cap_11(alpha, w, zp)
            if self.calc.homology_group(tensor(zp, zp), 0).is_zero(capped):
                return False, f"alpha cap w vanishes mod {p}"
            if not self.calc.cup_11(alpha, alpha).is_zero:
                return False, f"alpha^2 is not zero mod {p}"
            betas = self.calc.cohomology_group(zp, 2).generators
            if not any(h3.generates([self.calc.cup_12(alpha, beta).cocycle]) for beta in betas):
                return False, f"alpha beta does not generate H^3 mod {p}"
        return True, "alpha^2 = 0 and alpha beta generates H^3"


def run_verification(**kwargs) -> List[CheckResult]:
    return VerificationSuite(**kwargs).run()
