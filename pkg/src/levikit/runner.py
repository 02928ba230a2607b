"""
levikit command runner.

This module wires the command handlers to the library: it loads inputs through the run
context, runs the computation, writes results to standard output or the requested files and
maps errors to exit codes.
"""

import sys
from argparse import Namespace
from pathlib import Path
from typing import Callable, Dict, List, Optional

from loguru import logger

from levikit import catalog
from levikit.algebra import LieAlgebra, radical, validate
from levikit.config import LeviKitConfig, config, write_default_config
from levikit.context import RunContext
from levikit.errors import AssertionFailed, InputError, LeviKitError
from levikit.formats import codec
from levikit.gradings import DerivationFamily, Grading, grading_to_derivations, validate_grading
from levikit.levi import graded_levi, invariant_levi, verify_certificate
from levikit.split import factor_families, split_family

Handler = Callable[[RunContext, Namespace], int]

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None, run_config: Optional[LeviKitConfig] = None) -> None:
    """Configure logging for the application."""
    settings = (run_config or config).logging
    level = (level or settings.level).upper()
    log_file = log_file or settings.log_file

    # Remove default loguru handler
    logger.remove()

    logger.add(sys.stderr, level=level, format=LOG_FORMAT)

    if log_file:
        logger.add(
            log_file,
            rotation=settings.rotation,
            retention=settings.retention,
            level=level,
            format=FILE_LOG_FORMAT,
        )


def _print(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_algebra(ctx: RunContext, path: str) -> LieAlgebra:
    cached = ctx.cache_get(f"algebra:{path}")
    if cached is not None:
        return cached
    notes: List[str] = []
    g = codec.parse_algebra(ctx.read_input(path), path, notes)
    ctx.add_notes(notes)
    ctx.add_checks(validate(g))
    ctx.cache_set(f"algebra:{path}", g)
    return g


def _load_grading(ctx: RunContext, g: LieAlgebra, path: str) -> Grading:
    notes: List[str] = []
    grading = codec.parse_grading(ctx.read_input(path), path, notes, dim=g.dim)
    ctx.add_notes(notes)
    ctx.add_checks(validate_grading(g, grading))
    return grading


def _load_family(ctx: RunContext, g: LieAlgebra, args: Namespace) -> DerivationFamily:
    if getattr(args, "grading", None):
        return grading_to_derivations(g, _load_grading(ctx, g, args.grading))
    if getattr(args, "derivations", None):
        notes: List[str] = []
        family = codec.parse_family(ctx.read_input(args.derivations), g, args.derivations, notes)
        ctx.add_notes(notes)
        return family
    return DerivationFamily.empty(g)


def handle_validate(ctx: RunContext, args: Namespace) -> int:
    g = _load_algebra(ctx, args.algebra)
    _print(f"{args.algebra}: valid {g.dim}-dimensional Lie algebra ({len(g.structure)} structure constants)")
    return 0


def handle_radical(ctx: RunContext, args: Namespace) -> int:
    g = _load_algebra(ctx, args.algebra)
    r = radical(g)
    _print(codec.canonical_json({"dim": r.dim, "radical_basis": [[codec.format_rational(x) for x in v] for v in r.vectors]}))
    return 0


def handle_levi(ctx: RunContext, args: Namespace) -> int:
    g = _load_algebra(ctx, args.algebra)
    engine = ctx.config.engine
    if args.grading:
        grading = _load_grading(ctx, g, args.grading)
        result = graded_levi(g, grading, engine)
        cert = result.certificate
        ctx.add_notes([f"levi component at degree {d}: dim {s.dim}" for d, s in result.levi_components])
        ctx.add_notes([f"radical component at degree {d}: dim {s.dim}" for d, s in result.radical_components])
    else:
        cert = invariant_levi(g, _load_family(ctx, g, args), engine)
    ctx.report.trace.extend(step.describe() for step in cert.trace)
    ctx.log(f"Levi subalgebra of dim {cert.levi.dim}, radical of dim {cert.radical.dim}, {len(cert.trace)} ladder steps")

    # Nothing is written until the emitted text re-verifies
    text = codec.dump_certificate(g, cert)
    if engine.verify_after_levi:
        reread = codec.parse_certificate(text, g, cert.family, args.certificate or "<certificate>")
        report = verify_certificate(g, reread)
        ctx.add_checks(report)
        if not report.ok:
            raise AssertionFailed("every emitted certificate verifies", f"emitted certificate does not re-verify\n{report.summary()}")

    if args.certificate:
        ctx.add_output(codec.write_certificate(args.certificate, g, cert))
    else:
        _print(text)
    return 0


def handle_verify(ctx: RunContext, args: Namespace) -> int:
    g = _load_algebra(ctx, args.algebra)
    family = _load_family(ctx, g, args)
    notes: List[str] = []
    cert = codec.parse_certificate(ctx.read_input(args.certificate), g, family, args.certificate, notes)
    ctx.add_notes(notes)
    report = verify_certificate(g, cert)
    ctx.add_checks(report)
    _print(report.summary())
    ctx.log(f"Certificate {args.certificate}: {len(report.failures())} failed checks")
    return 0 if report.ok else InputError.exit_code


def handle_split(ctx: RunContext, args: Namespace) -> int:
    g = _load_algebra(ctx, args.algebra)
    family = _load_family(ctx, g, args)
    cert = invariant_levi(g, family, ctx.config.engine)
    result = split_family(g, cert)
    factored = factor_families(g, cert, result)
    if factored.levi_grading is not None:
        ctx.add_notes([f"inner parts grade the Levi subalgebra with degrees {list(factored.levi_grading.degrees)}"])
    text = codec.dump_split(result)
    if args.out:
        ctx.add_output(codec.write_split(args.out, result))
    else:
        _print(text)
    return 0


def handle_catalog_list(ctx: RunContext, args: Namespace) -> int:
    for name in catalog.get_available_entries():
        _print(f"{name:<20} {catalog.describe(name)}")
    return 0


def handle_catalog_emit(ctx: RunContext, args: Namespace) -> int:
    entry = catalog.get_entry(args.name)
    out = Path(args.out)
    ctx.add_output(codec.write_algebra(out / f"{entry.name}.algebra.json", entry.algebra))
    for k, grading in enumerate(entry.gradings):
        ctx.add_output(codec.write_grading(out / f"{entry.name}.grading{k}.json", grading))
    for k, family in enumerate(entry.families):
        ctx.add_output(codec.write_family(out / f"{entry.name}.derivations{k}.json", family))
    for path in ctx.report.outputs:
        _print(path)
    return 0


def handle_init(ctx: RunContext, args: Namespace) -> int:
    for path in write_default_config(args.dir):
        ctx.add_output(path)
        logger.info(f"Created configuration file: {path}")
    return 0


def handle_version(ctx: RunContext, args: Namespace) -> int:
    from levikit import __version__

    _print(f"levikit version: {__version__}")
    return 0


# Command registry
_COMMANDS: Dict[str, Handler] = {
    "validate": handle_validate,
    "radical": handle_radical,
    "levi": handle_levi,
    "verify": handle_verify,
    "split": handle_split,
    "catalog list": handle_catalog_list,
    "catalog emit": handle_catalog_emit,
    "init": handle_init,
    "version": handle_version,
}


def get_available_commands() -> List[str]:
    return list(_COMMANDS.keys())


class LeviKitRunner:
    """Runs one command and reports its outcome."""

    def __init__(self, run_config: Optional[LeviKitConfig] = None):
        self.config = run_config or config

    def run(self, command: str, args: Namespace, report_json: Optional[str] = None) -> int:
        """
        Run a command.

        Args:
            command: A registered command name.
            args: Parsed command-line arguments.
            report_json: Optional path for the JSON run report.

        Returns:
            The process exit code: 0 success, 1 invalid input, 2 unsupported scope, 3 internal error.
        """
        ctx = RunContext(command, self.config)
        ctx.log(f"Running {command} with engine settings {ctx.get_config()['engine']}", "DEBUG")
        handler = _COMMANDS[command]
        error: Optional[str] = None
        try:
            exit_code = handler(ctx, args)
        except LeviKitError as e:
            logger.error(str(e))
            exit_code, error = e.exit_code, str(e)
        except Exception as e:
            logger.exception(f"Unhandled error in {command}")
            exit_code, error = 3, f"{type(e).__name__}: {e}"
        ctx.finish(exit_code, error)
        ctx.emit_report(report_json)
        return exit_code
