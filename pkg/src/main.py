# -*- coding: utf-8 -*-
"""Command-line entry point.

    python -m src expand "2x^4 + x^2y + 4xy^2 + 4y^3" --terms 4
    python -m src verify @curve.txt --backend numeric
    python -m src polygon "x^5+8x^4-2x^2y^2-y^3+2y^4" --svg-dir out/

Results go to standard output; logs and error messages go to standard error.
Exit codes: 0 success, 1 other expansion error, 2 input error,
3 irrational root in exact mode, 4 verification failure.
"""

import argparse
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from src.core.config import get_settings
from src.core.errors import InputError, InvalidOptionError, NonRationalRootError, PuiseuxError
from src.core.logging import bind_context, clear_context, get_logger, setup_logging
from src.core.performance import measure_time
from src.models.options import OutputFormat, RunConfig, Subcommand
from src.models.series import StepEvent
from src.services.export_service import (
    build_polygon_report,
    render_expansion,
    render_polygon,
    render_verification,
)
from src.services.field import Backend
from src.services.poly_parser import parse_poly
from src.services.polygon import newton_polygon
from src.services.polygon_svg import write_polygon_svg
from src.services.verify import parse_samples, verify_expansion
from src.workflows.expansion import expand_all

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INPUT = 2
EXIT_NON_RATIONAL = 3
EXIT_VERIFY_FAILED = 4


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Puiseux expansions of plane algebraic curves at the origin",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="polynomial text, or @path to read it from a file")
    common.add_argument("--backend", choices=[b.value for b in Backend], default=Backend.EXACT.value)
    common.add_argument("--precision", type=int, default=None, help=f"bits (default {settings.precision})")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--svg-dir", type=Path, default=None, help="write Newton polygon snapshots here")

    expansion = argparse.ArgumentParser(add_help=False)
    expansion.add_argument("--terms", type=int, default=None, help=f"terms per branch (default {settings.max_terms})")
    expansion.add_argument("--depth", type=int, default=None, help=f"maximum depth (default {settings.max_depth})")
    expansion.add_argument("--no-fast-path", action="store_true", help="disable the regular-tail shortcut")
    expansion.add_argument("--workers", type=int, default=None, help="threads for top-level branches")

    subparsers.add_parser("expand", parents=[common, expansion], help="expand every branch")
    verify = subparsers.add_parser("verify", parents=[common, expansion], help="expand and verify every branch")
    verify.add_argument("--samples", default=None, help="comma separated sample points in (0, 0.1]")
    subparsers.add_parser("polygon", parents=[common], help="show the Newton polygon")
    return parser


def read_input(value: str) -> str:
    """Polynomial text, reading '@path' arguments from disk."""
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8").strip()
    return value


def _or_default(value, default):
    return default if value is None else value


def make_config(args: argparse.Namespace) -> RunConfig:
    """Validate the parsed arguments against settings defaults.

    Raises:
        InvalidOptionError: an option is out of range
    """
    settings = get_settings()
    samples = getattr(args, "samples", None)
    if args.subcommand == Subcommand.VERIFY.value:
        samples = parse_samples([s for s in samples.split(",") if s.strip()] if samples else None)
    try:
        return RunConfig(
            subcommand=args.subcommand,
            input=args.input,
            terms=_or_default(getattr(args, "terms", None), settings.max_terms),
            depth=_or_default(getattr(args, "depth", None), settings.max_depth),
            backend=args.backend,
            precision=_or_default(args.precision, settings.precision),
            format=args.format,
            svg_dir=args.svg_dir,
            samples=samples or [],
            fast_path=settings.fast_path and not getattr(args, "no_fast_path", False),
            workers=_or_default(getattr(args, "workers", None), settings.workers),
        )
    except ValidationError as e:
        raise InvalidOptionError(str(e)) from e


def _snapshot_observer(svg_dir: Path):
    def observe(event: StepEvent) -> None:
        state = event.state
        path = svg_dir / f"step_{state.branch_id}_{state.depth}.svg"
        write_polygon_svg(
            path,
            state.current.support_points(),
            event.chain,
            title=f"branch {state.branch_id}, depth {state.depth}",
        )

    return observe


def execute(config: RunConfig) -> int:
    """Run one parsed command and print its result."""
    opts = config.expand_options()
    fld = opts.make_field()
    text = read_input(config.input)
    f = parse_poly(text, fld)

    if config.subcommand is Subcommand.POLYGON:
        report = build_polygon_report(f, text)
        if config.svg_dir is not None:
            support = f.support_points()
            write_polygon_svg(config.svg_dir / "polygon.svg", support, newton_polygon(support))
        print(render_polygon(report, config.format))
        return EXIT_OK

    observer = _snapshot_observer(config.svg_dir) if config.svg_dir is not None else None
    with measure_time("expand", backend=fld.backend.value):
        result = expand_all(f, opts, observer)

    if config.subcommand is Subcommand.EXPAND:
        print(render_expansion(result, text, config.format))
        return EXIT_OK

    with measure_time("verify", branches=len(result.branches)):
        report = verify_expansion(f, result, text, config.samples)
    print(render_verification(report, config.format))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run the command and map errors to exit codes."""
    setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    clear_context()
    bind_context(command=args.subcommand, backend=args.backend)
    try:
        config = make_config(args)
        return execute(config)
    except (InputError, OSError) as e:
        logger.debug("Input rejected", error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except NonRationalRootError as e:
        factor = " ".join(str(c) for c in e.factor)
        print(
            f"error: {e} (branch {e.branch_id}; factor coefficients, ascending degree: {factor}); "
            "rerun with --backend numeric",
            file=sys.stderr,
        )
        return EXIT_NON_RATIONAL
    except PuiseuxError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        clear_context()


def main() -> None:
    sys.exit(run())
