"""Command-line interface for knotfloer."""

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from colorama import init as colorama_init

from . import __version__
from .algebra import PLFunction
from .complexes import serialize
from .constants import (
    CONFIG_DIR,
    CONFIG_FILE_NAME,
    EXIT_OK,
    EXIT_UNEXPECTED,
    EXIT_VERIFICATION,
    PACKAGE_NAME,
    VERIFY_SUITES,
)
from .core.application import KnotFloer, create_application
from .utils.errors import DomainError, KnotFloerError
from .utils.helpers import format_rational, parse_rational
from .utils.logging import logger


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except KnotFloerError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _class(text: str) -> List[int]:
    """`s1,s2,...` (an empty string is the empty class)."""
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from e


def _add_complex_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", help="kfc v1 complex file")
    parser.add_argument(
        "--torus", nargs=2, type=int, metavar=("P", "Q"), help="Use the staircase complex of T(P,Q)"
    )


def _add_csv(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--csv", action="store_true", help="Print t,value samples instead of breakpoints")
    parser.add_argument("--step", type=_rational, help="Sampling step for --csv (default from config)")


def create_parser() -> argparse.ArgumentParser:
    """Create the command-line argument parser."""
    parser = argparse.ArgumentParser(
        prog=PACKAGE_NAME,
        description="knotfloer: exact Upsilon, tau and cobordism grading computations from knot Floer complexes.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Examples:
  knotfloer upsilon --torus 2 3 --at 1/2
  knotfloer upsilon trefoil.kfc --pl
  knotfloer tau trefoil.kfc
  knotfloer mt --scalar 2
  knotfloer bound --upsilon1 k1.pl --class 2,-1 --genus 1
  knotfloer grading --pieces cobordism.txt --t 1/2
  knotfloer verify --suite all

Configuration:
  Default config directory: {CONFIG_DIR}
  Config file: {CONFIG_FILE_NAME} (optional)
  Use --config-dir to specify a custom location

Exit codes:
  0 success, 1 unexpected error, 2 parse or validation error, 3 domain error,
  4 verification failure
        """,
    )
    parser.add_argument("--version", action="version", version=f"{PACKAGE_NAME} {__version__}")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging output")
    parser.add_argument("--config-dir", type=str, help="Custom configuration directory path")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    upsilon = commands.add_parser("upsilon", help="Upsilon of a complex at one t or as a PL function")
    _add_complex_source(upsilon)
    mode = upsilon.add_mutually_exclusive_group(required=True)
    mode.add_argument("--at", type=_rational, metavar="T", help="Evaluate at t = p/q")
    mode.add_argument("--pl", action="store_true", help="Reconstruct the PL function")
    upsilon.add_argument("--Q", type=int, help="Denominator bound of the reconstruction grid")
    _add_csv(upsilon)

    tau = commands.add_parser("tau", help="tau of a complex")
    _add_complex_source(tau)

    mt = commands.add_parser("mt", help="The correction term M_t")
    which = mt.add_mutually_exclusive_group(required=True)
    which.add_argument("--class", dest="coeffs", type=_class, metavar="S1,S2,...")
    which.add_argument("--scalar", type=int, metavar="S")
    mt.add_argument("--charvec", action="store_true", help="Maximize over characteristic vectors")
    _add_csv(mt)

    bound = commands.add_parser("bound", help="Upsilon or tau bound across a negative-definite cobordism")
    source = bound.add_mutually_exclusive_group(required=True)
    source.add_argument("--upsilon1", metavar="FILE", help="Upsilon of K1 as a PL file or kfc complex")
    source.add_argument("--tau1", type=_rational, metavar="TAU", help="tau of K1")
    bound.add_argument("--class", dest="coeffs", type=_class, default=[], metavar="S1,S2,...")
    bound.add_argument("--genus", type=int, default=0)
    bound.add_argument("--band", action="store_true", help="Two-sided band for a rational homology cobordism")
    _add_csv(bound)

    crossing = commands.add_parser("crossing", help="Crossing-change bounds on Upsilon of K-")
    crossing.add_argument("--upsilon-plus", metavar="FILE", help="Upsilon of K+ as a PL file or kfc complex")
    crossing.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"), help="Take K+ = T(P,Q)")
    _add_csv(crossing)

    torus = commands.add_parser("torus", help="Upsilon of T(P,Q) from the closed formulas")
    torus.add_argument("p", type=int)
    torus.add_argument("q", type=int)
    _add_csv(torus)

    grading = commands.add_parser("grading", help="Grading change of a decorated cobordism")
    grading_source = grading.add_mutually_exclusive_group(required=True)
    grading_source.add_argument("--pieces", metavar="FILE", help="Piece list")
    grading_source.add_argument("--topology", metavar="FILE", help="YAML topology summary")
    grading.add_argument("--t", type=_rational, metavar="T", help="Also report the gr_t change")

    verify = commands.add_parser("verify", help="Run identity suites")
    verify.add_argument("--suite", required=True, choices=[*VERIFY_SUITES, "all"])

    validate = commands.add_parser("validate", help="Validate a kfc complex")
    validate.add_argument("file")

    conjugate = commands.add_parser("conjugate", help="Print the conjugate complex")
    conjugate.add_argument("file")

    staircase = commands.add_parser("staircase", help="Print the staircase complex of T(P,Q)")
    staircase.add_argument("p", type=int)
    staircase.add_argument("q", type=int)

    config = commands.add_parser("config", help="Configuration file helpers")
    config_action = config.add_mutually_exclusive_group(required=True)
    config_action.add_argument("--init", action="store_true", help="Write the configuration template")
    config_action.add_argument("--summary", action="store_true", help="Show the settings in effect")
    config_action.add_argument("--location", action="store_true", help="Show the configuration file path")

    return parser


def _pl_output(app: KnotFloer, args: argparse.Namespace, f: PLFunction) -> str:
    return app.format_pl(f, csv=args.csv, step=args.step)


def run_command(app: KnotFloer, args: argparse.Namespace) -> int:
    """Dispatch one parsed command; returns the exit code."""
    out = sys.stdout
    command = args.command

    if command == "upsilon":
        C = app.load_complex(args.file, args.torus)
        if args.at is not None:
            result = app.upsilon_at(C, args.at)
            tag = "\t# non-knot" if result.flagged else ""
            out.write(f"{format_rational(result.value)}{tag}\n")
        else:
            out.write(_pl_output(app, args, app.upsilon_pl(C, args.Q)))
    elif command == "tau":
        out.write(format_rational(app.tau(app.load_complex(args.file, args.torus))) + "\n")
    elif command == "mt":
        scalar = args.scalar is not None
        coeffs = [args.scalar] if scalar else args.coeffs
        out.write(_pl_output(app, args, app.mt(coeffs, scalar, args.charvec)))
    elif command == "bound":
        if args.tau1 is not None:
            if args.band:
                lower, upper = app.tau_band(args.tau1, args.genus)
                out.write(f"{format_rational(lower)}\t{format_rational(upper)}\n")
            else:
                out.write(format_rational(app.tau_bound(args.tau1, args.coeffs, args.genus)) + "\n")
        else:
            upsilon_K1 = app.load_upsilon_function(args.upsilon1)
            if args.band:
                lower, upper = app.genus_band(upsilon_K1, args.genus)
                out.write("# lower\n" + _pl_output(app, args, lower))
                out.write("# upper\n" + _pl_output(app, args, upper))
            else:
                out.write(_pl_output(app, args, app.upsilon_bound(upsilon_K1, args.coeffs, args.genus)))
    elif command == "crossing":
        if args.torus is not None:
            upsilon_plus = app.torus(*args.torus)
        elif args.upsilon_plus is not None:
            upsilon_plus = app.load_upsilon_function(args.upsilon_plus)
        else:
            raise DomainError("give --upsilon-plus FILE or --torus P Q")
        lower, upper = app.crossing_change(upsilon_plus)
        out.write("# lower\n" + _pl_output(app, args, lower))
        out.write("# upper\n" + _pl_output(app, args, upper))
    elif command == "torus":
        out.write(_pl_output(app, args, app.torus(args.p, args.q)))
    elif command == "grading":
        out.write(app.grading_report(args.pieces, args.topology, args.t))
    elif command == "verify":
        results = app.verify(args.suite)
        for result in results:
            out.write(result.report_line() + "\n")
            for failure in result.failures:
                logger.error(f"{result.name}: {failure}")
        if not all(result.passed for result in results):
            return EXIT_VERIFICATION
    elif command == "validate":
        C = app.load_complex(args.file)
        out.write(f"valid\t{len(C.generators)} generators\t{len(C.edges)} edges\n")
    elif command == "conjugate":
        out.write(app.conjugate_text(app.load_complex(args.file)))
    elif command == "staircase":
        out.write(serialize(app.load_complex(torus=[args.p, args.q])))
    elif command == "config":
        manager = app.config_manager
        if args.init:
            manager.write_template()
        elif args.summary:
            out.write(manager.summary())
        else:
            out.write(f"{manager.config_file}\n")
    out.flush()
    return EXIT_OK


def main(args: Optional[List[str]] = None) -> None:
    """Main entry point for the CLI."""
    # Colour escape codes go to stderr only; stdout stays plain
    colorama_init()

    parser = create_parser()
    parsed_args = parser.parse_args(args)

    try:
        app = create_application(config_dir=parsed_args.config_dir, debug=parsed_args.debug)
        code = run_command(app, parsed_args)
    except KnotFloerError as e:
        logger.error(str(e))
        sys.exit(e.exit_code)
    except KeyboardInterrupt:
        logger.system("Interrupted by user")
        sys.exit(EXIT_UNEXPECTED)
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        sys.exit(EXIT_UNEXPECTED)
    sys.exit(code)


if __name__ == "__main__":
    main()
