# -*- coding: utf-8 -*-
"""Command line front end

Subcommands:

* ``compute``: cohomology and homology groups in degrees 0..3
* ``products``: table of cup products of generators
* ``verify``: structural and acceptance checks over a parameter matrix

Exit codes are 0 on success, 1 if a verification check fails and 2 on
invalid input.
"""
from typing import List, Optional, Sequence
from collections import namedtuple
import argparse
import json
import logging
import sys

from .errors import CohomologyError
from .coefficients import CoefficientModule, parse_coefficient
from .group import validate_params
from .homology import cohomology, homology
from .products import ProductCalculator
from .report import (compute_text, compute_document, products_text, products_document,
                     verify_text, verify_document)
from .resolution import build_resolution
from .utils import parse_ints
from .verify import PARAMETER_MATRIX, VerificationSuite
from .version import version

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

MAX_COEFFICIENTS = 2


class RunConfig(namedtuple("RunConfig", ["command", "params", "coefficients", "output_format",
                                         "seed", "samples", "triples", "inject_fault",
                                         "log_level"])):
    """Validated options of one run

    Attributes:
        command: ``compute``, ``products`` or ``verify``
        params: :class:`GroupParams` or ``None`` (verify without ``--params``)
        coefficients: List of ``(expression, module)`` pairs
        output_format: ``text`` or ``json``
        seed: Seed of the random generator
        samples: Random elements for the contracting homotopy check
        triples: Random word triples for the group law check
        inject_fault: Flip a sign of d2 before verifying
        log_level: Name of the logging level
    """
    __slots__ = ()

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Validate parameters and parse coefficients

        Raises:
            RejectedParams: For parameters outside the supported regime
            CoefficientSyntaxError, InvalidCharacter, InvalidModule: For bad
                coefficient expressions
        """
        params = None
        if args.params is not None:
            try:
                values = parse_ints(args.params, count=4)
            except ValueError as err:
                raise argparse.ArgumentTypeError(str(err))
            params = validate_params(*values)
        elif args.command != "verify":
            raise argparse.ArgumentTypeError(f"{args.command} needs --params r,s,t,u")

        expressions = list(args.coeff or [])
        if len(expressions) > MAX_COEFFICIENTS:
            raise argparse.ArgumentTypeError(
                f"At most {MAX_COEFFICIENTS} coefficient expressions allowed, got {len(expressions)}")
        coefficients = [(expr, parse_coefficient(expr, params)) for expr in expressions]

        return cls(command=args.command,
                   params=params,
                   coefficients=coefficients,
                   output_format=args.format,
                   seed=args.seed,
                   samples=getattr(args, "samples", 200),
                   triples=getattr(args, "triples", 500),
                   inject_fault=getattr(args, "inject_fault", False),
                   log_level=args.log_level)

    def modules(self, default: str = "Z") -> List[CoefficientModule]:
        if self.coefficients:
            return [module for _, module in self.coefficients]
        return [parse_coefficient(default, self.params)]


def _emit(document: dict, text: str, cfg: RunConfig) -> None:
    if cfg.output_format == "json":
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_compute(cfg: RunConfig) -> int:
    """Print ``H^k(G;A)`` and ``H_k(G;A)`` for every coefficient module"""
    resolution = build_resolution(cfg.params)
    groups = []
    for module in cfg.modules():
        logger.info(f"Computing groups over {module} for params {cfg.params}")
        groups.extend(cohomology(resolution, module))
        groups.extend(homology(resolution, module))
    _emit(compute_document(cfg.params, groups), compute_text(cfg.params, groups), cfg)
    return EXIT_OK


def cmd_products(cfg: RunConfig) -> int:
    """Print the product table of ``H^*(G;A) x H^*(G;B)``

    A single coefficient module is used for both factors.
    """
    modules = cfg.modules()
    left, right = (modules[0], modules[0]) if len(modules) == 1 else modules
    logger.info(f"Computing products over {left} and {right} for params {cfg.params}")
    calc = ProductCalculator(build_resolution(cfg.params))
    table = calc.product_table(left, right)
    generators = [calc.cohomology_group(left, 1), calc.cohomology_group(left, 2)]
    if right != left:
        generators += [calc.cohomology_group(right, 1), calc.cohomology_group(right, 2)]
    _emit(products_document(table), products_text(table, generators), cfg)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    """Run the verification suite, exit 1 if any check fails"""
    matrix = PARAMETER_MATRIX if cfg.params is None else (tuple(cfg.params),)
    logger.info(f"Verifying {len(matrix)} parameter sets with seed {cfg.seed}")
    suite = VerificationSuite(matrix, seed=cfg.seed, samples=cfg.samples,
                              triples=cfg.triples, inject_fault=cfg.inject_fault)
    results = suite.run()
    _emit(verify_document(results), verify_text(results), cfg)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


COMMANDS = {"compute": cmd_compute, "products": cmd_products, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sapphire-cohomology",
        description="Cohomology groups and cup products of Sol sapphire groups")
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", metavar="R,S,T,U",
                        help="Gluing parameters, e.g. 1,2,-1,-1")
    common.add_argument("--coeff", action="append", metavar="EXPR",
                        help="Coefficient module: Z, Zeta:a,b,c, Zp:p or tensor(A,B). "
                             "Repeatable, at most twice.")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="Output format (default: text)")
    common.add_argument("--seed", type=int, default=0,
                        help="Seed for sampled checks (default: 0)")
    common.add_argument("--log-level", default="WARNING",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
                        help="Logging level on stderr (default: WARNING)")

    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("compute", parents=[common],
                          help="Groups H^k and H_k for k = 0..3")
    subparsers.add_parser("products", parents=[common],
                          help="Cup products of generators in bidegrees (1,1), (1,2), (2,1)")
    verify = subparsers.add_parser("verify", parents=[common],
                                   help="Run the verification suite")
    verify.add_argument("--samples", type=int, default=200, metavar="N",
                        help="Random elements for the contracting homotopy (default: 200)")
    verify.add_argument("--triples", type=int, default=500, metavar="N",
                        help="Random word triples for the group law (default: 500)")
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, args.log_level),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except argparse.ArgumentTypeError as err:
        print(f"error: invalid-arguments: {err}", file=sys.stderr)
        return EXIT_INVALID
    except CohomologyError as err:
        print(f"error: {err.reason}: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
