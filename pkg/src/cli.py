"""Command-line surface: argument parsing, dispatch and JSON output"""
import argparse
import json
import logging
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type

from .config import Config, Session
from .errors import DiffChowError
from .handlers.algebra_handlers import AlgebraHandlers
from .handlers.base import BaseHandlers
from .handlers.chow_handlers import ChowHandlers
from .models.ground import GroundMode
from .models.ring import RingDescriptor

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help='ring declaration, e.g. "Y=3 U=2x3 S=1 const=s0 field=Qx"')
    common.add_argument("--field", choices=[m.value for m in GroundMode])
    common.add_argument("--precision", type=_positive)
    common.add_argument("--max-order", type=_non_negative)
    common.add_argument("--max-degree", type=_positive)
    common.add_argument("--seed", type=_non_negative)
    common.add_argument("--pretty", action="store_true", help="indented JSON")
    return common


class CommandLine:
    """Builds the parser and routes each subcommand to its handler"""

    def __init__(self, config: Optional[Config] = None):
        self.config = config
        self.commands: Dict[str, Tuple[Type[BaseHandlers], str]] = {}
        self.parser = self.setup_parser()

    def setup_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog="diffchow", description="Exact differential Chow form engine")
        subparsers = parser.add_subparsers(dest="command", required=True)
        common = _common_flags()

        def command(name: str, owner: Type[BaseHandlers], method: str, help_text: str) -> argparse.ArgumentParser:
            self.commands[name] = (owner, method)
            return subparsers.add_parser(name, parents=[common], help=help_text)

        sub = command("reduce", AlgebraHandlers, "reduce", "pseudo-remainder modulo a characteristic set")
        sub.add_argument("inputs", nargs="+")
        sub.add_argument("--charset", action="append", required=True)
        sub.add_argument("--ranking")
        sub.add_argument("--cofactors", action="store_true")

        sub = command("charset", AlgebraHandlers, "compute_charset", "characteristic set of the generators")
        sub.add_argument("inputs", nargs="+")
        sub.add_argument("--ranking")

        sub = command("homog-check", AlgebraHandlers, "homog_check", "differential homogeneity test")
        sub.add_argument("inputs", nargs="+")
        sub.add_argument("--block", action="append", help="Y or u<i>; repeat for p-homogeneity")

        sub = command("homogenize", AlgebraHandlers, "homogenize", "projective image of affine polynomials")
        sub.add_argument("inputs", nargs="+")

        sub = command("dehomogenize", AlgebraHandlers, "dehomogenize", "set y0 = 1")
        sub.add_argument("inputs", nargs="*")
        sub.add_argument("--charset", action="append")
        sub.add_argument("--ranking")

        sub = command("vdelta", AlgebraHandlers, "vdelta", "an algebraic variety as a differential variety")
        sub.add_argument("--variety", required=True)

        sub = command("dimpoly", AlgebraHandlers, "dimpoly", "differential dimension polynomial")
        sub.add_argument("--charset", action="append", required=True)
        sub.add_argument("--ranking")
        sub.add_argument("--affine", action="store_true")

        sub = command("intersect", AlgebraHandlers, "intersect", "cut by generic hyperplanes")
        sub.add_argument("--charset", action="append", required=True)
        sub.add_argument("--ranking")
        sub.add_argument("--count", type=_positive, default=1)
        sub.add_argument("--affine", action="store_true")

        sub = command("chow", ChowHandlers, "chow", "algebraic or differential Chow form")
        sub.add_argument("--variety")
        sub.add_argument("--algebraic", action="store_true")
        sub.add_argument("--charset", action="append")
        sub.add_argument("--ranking")
        sub.add_argument("--point", action="append", help="generic point, e.g. '1, s, 0'")
        sub.add_argument("--n", type=_positive)
        sub.add_argument("--properties", action="store_true")

        sub = command("rv", ChowHandlers, "rv", "Kolchin's linear-dependence polynomial R_V")
        sub.add_argument("--variety", required=True)
        sub.add_argument("--n", type=_positive)

        sub = command("lindep", ChowHandlers, "lindep", "linear dependence over V")
        sub.add_argument("--variety", required=True)
        sub.add_argument("--point", action="append", required=True)

        sub = command("witness", ChowHandlers, "witness", "point of V on the given hyperplanes")
        sub.add_argument("--variety", required=True)
        sub.add_argument("--point", action="append", required=True, help="one per hyperplane block")

        sub = command("verify54", ChowHandlers, "verify54", "compare R_V with the Chow form of V^δ")
        sub.add_argument("--variety", required=True)
        return parser

    def session(self, args: argparse.Namespace) -> Session:
        """Environment configuration with the command-line flags laid over it"""
        config = self.config or Config.from_env()
        overrides: Dict[str, Any] = {}
        for flag in ("precision", "max_order", "max_degree", "seed"):
            value = getattr(args, flag)
            if value is not None:
                overrides[flag] = value
        if args.field:
            overrides['field'] = GroundMode.parse(args.field)
        config = replace(config, **overrides)
        ring = RingDescriptor.parse(args.ring, config.field) if args.ring else None
        return Session(config=config, ring=ring, pretty=args.pretty)

    def dispatch(self, args: argparse.Namespace) -> Dict[str, Any]:
        session = self.session(args)
        owner, method = self.commands[args.command]
        logger.info(f"running {args.command}")
        return getattr(owner(session), method)(args)

    def run(self, argv: Sequence[str]) -> int:
        try:
            args = self.parser.parse_args(list(argv))
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK
        try:
            result = self.dispatch(args)
        except DiffChowError as e:
            logger.error(f"{e.code}: {e}")
            emit(e.to_dict(), getattr(args, "pretty", False))
            return EXIT_DOMAIN_ERROR
        emit(result, args.pretty)
        return EXIT_OK


def emit(payload: Dict[str, Any], pretty: bool = False) -> None:
    if pretty:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(json.dumps(payload, separators=(",", ":"), ensure_ascii=False))


def run(argv: List[str], config: Optional[Config] = None) -> int:
    """Run one command; the JSON result or error goes to standard output"""
    return CommandLine(config).run(argv)
