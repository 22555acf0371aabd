"""Command-line entry point."""

import logging
import sys
from pathlib import Path
from typing import Any, BinaryIO, Callable, List, Optional, Sequence, Tuple

import click

from .. import __version__
from ..config import ScoringSettings, get_settings
from ..corpus import load_corpus
from ..models import Algorithm, CpcerError, InputFormat, ReportFormat, ReportIoError
from ..report import emit_comparison, emit_report
from .pipeline import score_against, score_files
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCORING = 3

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _configure_logging(level: str) -> None:
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT, force=True)


def _choice(enum: Any) -> click.Choice:
    return click.Choice([member.value for member in enum])


def _scoring_options(func: Callable) -> Callable:
    """Options shared by ``score`` and ``compare``."""
    options = [
        click.option("--ref", "ref_path", required=True, type=click.Path(dir_okay=False, path_type=Path), help="Reference transcript file."),
        click.option("--input-format", type=_choice(InputFormat), default=None, help="Transcript format [default: tsv]."),
        click.option("--output", "output_path", type=click.Path(dir_okay=False, allow_dash=True, path_type=Path), default=None, help="Report file [default: stdout]."),
        click.option("--report-format", type=_choice(ReportFormat), default=None, help="Report format [default: pretty]."),
        click.option("--algorithm", type=_choice(Algorithm), default=None, help="Permutation search [default: hungarian]."),
        click.option("--nfkc/--no-nfkc", "apply_compatibility_normalization", default=None, help="Unicode compatibility normalization [default: on]."),
        click.option("--strip-whitespace/--keep-whitespace", "strip_whitespace", default=None, help="Remove whitespace [default: strip]."),
        click.option("--strip-punctuation/--keep-punctuation", "strip_punctuation", default=None, help="Remove punctuation [default: keep]."),
        click.option("--case-fold-latin/--no-case-fold-latin", "case_fold_latin", default=None, help="Lower-case Latin letters [default: off]."),
        click.option("--group-by-speakers/--no-group-by-speakers", default=None, help="Per speaker-count groups [default: on]."),
        click.option("--jobs", type=click.IntRange(min=1), default=None, help="Parallel sessions [default: all processors]."),
        click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="TOML settings file [default: ./cpcer.toml if present]."),
        click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False), default=None, help="Diagnostic verbosity [default: WARNING]."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _load_settings(params: dict) -> ScoringSettings:
    normalization = {
        key: params.pop(key)
        for key in (
            "apply_compatibility_normalization",
            "strip_whitespace",
            "strip_punctuation",
            "case_fold_latin",
        )
    }
    settings = get_settings(params.pop("config_path"), normalization=normalization, **params)
    _configure_logging(settings.log_level)
    return settings


def _write_output(data: bytes, output_path: Optional[Path]) -> None:
    if output_path is None or str(output_path) == "-":
        stream: BinaryIO = click.get_binary_stream("stdout")
        stream.write(data)
        stream.flush()
        return
    try:
        output_path.write_bytes(data)
    except OSError as e:
        raise ReportIoError(f"cannot write report to {output_path}: {e.strerror or e}") from e
    logger.info(f"Report written to {output_path}")


def _parse_system(value: str) -> Tuple[str, Path]:
    name, sep, path = value.partition("=")
    if not sep:
        return Path(value).stem, Path(value)
    if not name or not path:
        raise click.BadParameter(f"expected NAME=PATH, got {value!r}", param_hint="--hyp")
    return name, Path(path)


@click.group()
@click.version_option(__version__, prog_name="cpcer")
def cli() -> None:
    """Speaker-attributed transcription scoring with cpCER."""


@cli.command()
@_scoring_options
@click.option("--hyp", "hyp_path", required=True, type=click.Path(dir_okay=False, path_type=Path), help="Hypothesis transcript file.")
@click.option("--per-session/--no-per-session", default=None, help="Add per-session rows [default: off].")
def score(ref_path: Path, hyp_path: Path, output_path: Optional[Path], **params: Any) -> int:
    """Score a hypothesis transcript file against a reference."""
    settings = _load_settings(params)
    report = score_files(settings, ref_path, hyp_path)
    data = emit_report(report, settings.report_format, per_session=settings.per_session)
    _write_output(data, output_path)
    return EXIT_OK


@cli.command()
@_scoring_options
@click.option("--hyp", "systems", required=True, multiple=True, help="System as NAME=PATH; repeatable.")
def compare(ref_path: Path, systems: Sequence[str], output_path: Optional[Path], **params: Any) -> int:
    """Score several systems against one reference, one row per system."""
    parsed = [_parse_system(value) for value in systems]
    names = [name for name, _ in parsed]
    if len(set(names)) != len(names):
        raise click.BadParameter("system names must be unique", param_hint="--hyp")

    settings = _load_settings(params)
    ref = load_corpus(ref_path, settings.input_format, settings.normalization)
    reports = [(name, score_against(settings, ref, path)) for name, path in parsed]
    data = emit_comparison(reports, settings.report_format)
    _write_output(data, output_path)
    return EXIT_OK


@cli.command()
@click.option("--trials", type=click.IntRange(min=1), default=1000, show_default=True, help="Random instances per check.")
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed.")
def selftest(trials: int, seed: int) -> int:
    """Check the fast engines against their oracles on random instances."""
    _configure_logging("WARNING")
    mismatches = run_selftest(trials=trials, seed=seed)
    if mismatches:
        click.echo(f"selftest: {len(mismatches)} mismatch(es)", err=True)
        return EXIT_SCORING
    click.echo(f"selftest: {2 * trials} checks passed", err=True)
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        result = cli.main(args=argv, prog_name="cpcer", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except CpcerError as e:
        click.echo(f"error: {e.message}", err=True)
        return e.exit_code
    except Exception as e:
        logger.debug(f"Unhandled {type(e).__name__} in run()", exc_info=True)
        click.echo(f"error: internal failure: {type(e).__name__}: {e}", err=True)
        return EXIT_SCORING
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
