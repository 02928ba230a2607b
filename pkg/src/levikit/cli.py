"""
Command-line interface for levikit.

This module provides the ``levikit`` command: Levi decompositions of graded Lie algebras with
verifiable certificates.
"""

import argparse
import sys
from typing import List, Optional

from levikit.config import load_config
from levikit.runner import LeviKitRunner, get_available_commands, setup_logging


def _add_family_options(parser: argparse.ArgumentParser, required: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--grading", type=str, help="Grading file")
    group.add_argument("--derivations", type=str, help="Derivation family file")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = argparse.ArgumentParser(
        prog="levikit",
        description="levikit - invariant Levi decompositions of graded Lie algebras over Q",
    )
    parser.add_argument("--config", type=str, help="Path to the configuration directory or file")
    parser.add_argument("--log-level", type=str, help="Logging level")
    parser.add_argument("--report-json", type=str, help="Write the run report as JSON to this path")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    validate_parser = subparsers.add_parser("validate", help="Check the Jacobi identity of an algebra file")
    validate_parser.add_argument("algebra", type=str, help="Algebra file")

    radical_parser = subparsers.add_parser("radical", help="Print a basis of the solvable radical")
    radical_parser.add_argument("algebra", type=str, help="Algebra file")

    levi_parser = subparsers.add_parser("levi", help="Compute an invariant Levi decomposition")
    levi_parser.add_argument("algebra", type=str, help="Algebra file")
    _add_family_options(levi_parser)
    levi_parser.add_argument("--certificate", type=str, help="Write the certificate here instead of stdout")

    verify_parser = subparsers.add_parser("verify", help="Verify a certificate against its algebra")
    verify_parser.add_argument("algebra", type=str, help="Algebra file")
    verify_parser.add_argument("certificate", type=str, help="Certificate file")
    _add_family_options(verify_parser)

    split_parser = subparsers.add_parser("split", help="Split derivations into inner and residual parts")
    split_parser.add_argument("algebra", type=str, help="Algebra file")
    _add_family_options(split_parser, required=True)
    split_parser.add_argument("--out", type=str, help="Write the split here instead of stdout")

    catalog_parser = subparsers.add_parser("catalog", help="Named test algebras")
    catalog_sub = catalog_parser.add_subparsers(dest="catalog_command", help="Catalog command")
    catalog_sub.add_parser("list", help="List catalog entries")
    emit_parser = catalog_sub.add_parser("emit", help="Write an entry's algebra, gradings and families")
    emit_parser.add_argument("name", type=str, help="Entry name")
    emit_parser.add_argument("--out", type=str, default=".", help="Output directory")

    init_parser = subparsers.add_parser("init", help="Write the default configuration")
    init_parser.add_argument("--dir", type=str, default="./config", help="Directory to create configuration in")

    subparsers.add_parser("version", help="Show version information")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    command = args.command
    if command == "catalog":
        if not args.catalog_command:
            print("No catalog command provided. Use --help for usage information.", file=sys.stderr)
            return 1
        command = f"catalog {args.catalog_command}"
    if command not in get_available_commands():
        # If no command is provided, show help
        print(f"No command provided. Available commands: {', '.join(get_available_commands())}", file=sys.stderr)
        return 1

    run_config = load_config(args.config) if args.config else None
    setup_logging(args.log_level, run_config=run_config)
    return LeviKitRunner(run_config).run(command, args, args.report_json)


if __name__ == "__main__":
    sys.exit(main())
