"""
Command Line Interface for the linear representation toolkit
"""

import functools
import json
import logging
import sys
from typing import Optional

import click

from src import __version__
from src.config import get_config_loader, get_settings
from src.core.batch import run_sweep, summarize
from src.core.errors import InputError, InvariantError, LinRepError
from src.core.funcgraph import parse_function, parse_int_list
from src.core.linrep import (
    LinearRepresentation,
    Mode,
    construct,
    row_polynomials,
    threshold,
    verify
)
from src.core.oracle import SearchBudget, search_minimal
from src.output.envelope import (
    OutputEnvelope,
    batch_payload,
    minimal_payload,
    polynomial_payload,
    repr_payload,
    verify_payload
)
from src.output.report import (
    format_polynomials,
    format_representation,
    format_search,
    write_batch_csv
)


logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_BUDGET_EXHAUSTED = 4
EXIT_INTERNAL = 70

DEGENERATE_NOTICE = "degenerate input: n = 0, every condition is vacuous (m = 1, a = 0, empty j)"


def handle_errors(command):
    """Map toolkit exceptions onto the exit-code contract"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except LinRepError as e:
            click.echo(f"❌ {e}", err=True)
            sys.exit(e.exit_code)
        except Exception as e:
            logger.exception("Unexpected failure")
            click.echo(f"❌ Internal error: {e}", err=True)
            sys.exit(EXIT_INTERNAL)
    return wrapper


def emit(envelope: OutputEnvelope, as_json: bool, lines, err: bool = False):
    """Print the envelope (JSON mode) or the human-readable lines"""
    if as_json:
        click.echo(envelope.to_json(), err=err)
        return
    for line in lines:
        click.echo(line, err=err)
    for notice in envelope.diagnostics:
        click.echo(f"⚠️  {notice}", err=err)


@click.group()
@click.version_option(version=__version__)
@click.option('--log-level', type=click.Choice(
    ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], case_sensitive=False),
    help='Override the configured log level')
def cli(log_level: Optional[str]):
    """Linear representations of functions on finite sets"""
    try:
        settings = get_settings()
    except LinRepError as e:
        click.echo(f"❌ Invalid configuration: {e}", err=True)
        sys.exit(e.exit_code)

    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        format=settings.log_format,
        stream=sys.stderr,
        force=True
    )


@cli.command('repr')
@click.argument('fn')
@click.option('--mode', type=click.Choice(['bound', 'tight']), help='How to choose x (default: bound)')
@click.option('--x', 'x_value', type=int, help='Evaluate at this x instead')
@click.option('--json', 'as_json', is_flag=True, help='Emit the JSON envelope')
@handle_errors
def repr_command(fn: str, mode: Optional[str], x_value: Optional[int], as_json: bool):
    """Construct and verify a linear representation of FN"""
    if mode and x_value is not None:
        raise InputError("--mode and --x are mutually exclusive")

    f = parse_function(fn)
    if x_value is not None:
        chosen = Mode.EXPLICIT
    else:
        chosen = Mode.TIGHT if mode == 'tight' else Mode.BOUND

    rp = row_polynomials(f) if f.n else None
    rep = construct(f, chosen, x=x_value, rp=rp)
    certificate = verify(f, rep)
    bound = threshold(rp) if rp else None

    envelope = OutputEnvelope(command='repr', input=fn, result=repr_payload(rep, certificate, bound))
    if rep.degenerate:
        envelope.add_diagnostic(DEGENERATE_NOTICE)
    if bound is not None and chosen is Mode.TIGHT:
        envelope.add_diagnostic(
            f"threshold overshoot factor: threshold {bound} / tight x {rep.x} = {bound / rep.x:.2f}"
        )

    emit(envelope, as_json, format_representation(f, rep, certificate))

    if not certificate.passed:
        raise InvariantError(f"constructed representation failed verification: "
                             f"{certificate.first_failure()}")


@cli.command('verify')
@click.argument('fn')
@click.option('--m', 'modulus', type=int, required=True, help='Modulus m')
@click.option('--a', 'multiplier', type=int, required=True, help='Multiplier a')
@click.option('--j', 'j_text', required=True, help='Embedding values, e.g. "12,24,33"')
@click.option('--json', 'as_json', is_flag=True, help='Emit the JSON envelope')
@handle_errors
def verify_command(fn: str, modulus: int, multiplier: int, j_text: str, as_json: bool):
    """Check that (M, A, J) is a linear representation of FN"""
    f = parse_function(fn)
    j = parse_int_list(j_text, allow_negative=True)
    if modulus < 1:
        raise InputError(f"--m must be a positive integer, got {modulus}")
    if len(j) != f.n:
        raise InputError(f"--j has {len(j)} values but the function has n={f.n}")

    rep = LinearRepresentation(
        n=f.n, x=None, m=modulus, a=multiplier, j=tuple(j), mode=Mode.USER
    )
    certificate = verify(f, rep)

    envelope = OutputEnvelope(command='verify', input=fn, result=verify_payload(rep, certificate))
    if rep.degenerate:
        envelope.add_diagnostic(DEGENERATE_NOTICE)
    emit(envelope, as_json, format_representation(f, rep, certificate))

    if not certificate.passed:
        sys.exit(EXIT_VERIFICATION_FAILED)


@cli.command('charpoly')
@click.argument('fn')
@click.option('--json', 'as_json', is_flag=True, help='Emit the JSON envelope')
@handle_errors
def charpoly_command(fn: str, as_json: bool):
    """Show det(xI - A), adj(xI - A) and the row polynomials of FN"""
    f = parse_function(fn)
    envelope = OutputEnvelope(command='charpoly', input=fn, result={})

    if f.n == 0:
        envelope.result = {
            'n': 0, 'char_poly': ['1'], 'adjugate': [], 'row_polynomials': [], 'threshold': None
        }
        envelope.add_diagnostic(DEGENERATE_NOTICE)
        lines = ["det(xI - A) = 1"]
    else:
        rp = row_polynomials(f)
        envelope.result = polynomial_payload(rp)
        envelope.result['threshold'] = str(threshold(rp))
        lines = format_polynomials(rp) + ["", f"threshold x* = {threshold(rp)}"]

    emit(envelope, as_json, lines)


@cli.command('minimal')
@click.argument('fn')
@click.option('--max-m', type=int, help='Largest modulus to try (default from config)')
@click.option('--max-assignments', type=int, help='Backtracking node budget (default from config)')
@click.option('--json', 'as_json', is_flag=True, help='Emit the JSON envelope')
@handle_errors
def minimal_command(fn: str, max_m: Optional[int], max_assignments: Optional[int], as_json: bool):
    """Search for the smallest modulus representing FN"""
    settings = get_settings()
    f = parse_function(fn)
    budget = SearchBudget(
        max_m=max_m if max_m is not None else settings.oracle_max_m,
        max_assignments=(max_assignments if max_assignments is not None
                         else settings.oracle_max_assignments)
    )

    result = search_minimal(f, budget)
    constructive = construct(f, Mode.TIGHT)

    envelope = OutputEnvelope(
        command='minimal', input=fn, result=minimal_payload(result, constructive)
    )
    if f.n == 0:
        envelope.add_diagnostic(DEGENERATE_NOTICE)
    if result.exhausted:
        envelope.add_diagnostic(
            f"node budget of {budget.max_assignments} exhausted after m={result.searched_through}"
        )
    emit(envelope, as_json, format_search(result, constructive.m))

    if not result.found:
        sys.exit(EXIT_BUDGET_EXHAUSTED)
    if not verify(f, result.representation).passed:
        raise InvariantError("minimal search returned a representation that fails verification")


@cli.command('batch')
@click.option('--n', 'n', type=int, required=True, help='Domain size')
@click.option('--mode', type=click.Choice(['bound', 'tight']), help='How to choose x')
@click.option('--with-minimal', is_flag=True, help='Add the minimal modulus column')
@click.option('--out', default='-', show_default=True, help='CSV path, "-" for standard output')
@click.option('--workers', type=int, help='Worker threads (default from config)')
@click.option('--json', 'as_json', is_flag=True, help='Emit the summary as a JSON envelope')
@handle_errors
def batch_command(n: int, mode: Optional[str], with_minimal: bool, out: str,
                  workers: Optional[int], as_json: bool):
    """Construct and verify representations of every function on N elements"""
    settings = get_settings()
    chosen = Mode.TIGHT if (mode or settings.batch_mode) == 'tight' else Mode.BOUND
    budget = SearchBudget(
        max_m=settings.oracle_max_m, max_assignments=settings.oracle_max_assignments
    )

    rows = run_sweep(
        n,
        mode=chosen,
        with_minimal=with_minimal,
        workers=workers or settings.batch_workers,
        budget=budget
    )
    summary = summarize(n, chosen, rows, with_minimal)

    to_stdout = out == '-'
    if to_stdout:
        write_batch_csv(rows, sys.stdout, with_minimal)
    else:
        try:
            with open(out, 'w', newline='') as stream:
                write_batch_csv(rows, stream, with_minimal)
        except OSError as e:
            raise InputError(f"cannot write {out}: {e}")

    envelope = OutputEnvelope(command='batch', input=f"--n {n}", result=batch_payload(summary, out))
    lines = [
        f"{'✅' if not summary.failures else '❌'} {summary.verified}/{summary.total} "
        f"functions on n={n} verified ({chosen.value})"
    ]
    if not to_stdout:
        lines.append(f"📄 CSV written to {out}")
    emit(envelope, as_json, lines, err=to_stdout)

    if summary.failures:
        sys.exit(EXIT_VERIFICATION_FAILED)


@cli.command('config')
@click.argument('key')
@click.option('--default', help='Default value if key not found')
def config(key: str, default: Optional[str]):
    """Get configuration value"""
    value = get_config_loader().get(key, default)

    if value is not None:
        click.echo(f"{key} = {value}")
    else:
        click.echo(f"❌ Configuration key '{key}' not found", err=True)
        sys.exit(1)


@cli.command('export-config')
@click.option('--format', 'fmt', type=click.Choice(['json', 'yaml', 'table']), default='table')
def export_config(fmt: str):
    """Export the merged configuration"""
    config = get_config_loader().get_all()

    if fmt == 'json':
        click.echo(json.dumps(config, indent=2))
    elif fmt == 'yaml':
        import yaml
        click.echo(yaml.safe_dump(config, default_flow_style=False))
    else:
        def print_dict(d, indent=0):
            for key, value in d.items():
                if isinstance(value, dict):
                    click.echo("  " * indent + f"{key}:")
                    print_dict(value, indent + 1)
                else:
                    click.echo("  " * indent + f"{key}: {value}")

        print_dict(config)


if __name__ == '__main__':
    cli()
