"""
CLI commands for qseries-j using Typer.
"""

import json
import logging
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from ..core.closed_form import closed_forms
from ..core.errors import ConfigError, NotPrime, QSeriesError, UnsupportedPrime
from ..core.identities import DEFAULT_ORDER, DEFAULT_PRIMES, run_suite
from ..core.multisection import j_family, prime_context
from ..core.qfunctions import ThetaArg, partition_series, theta_product, theta_sum
from ..core.series import ScaledSeries, compare, dilate, multisect
from ..utils.icons import ICONS
from .config import CliConfig, parse_primes

logger = logging.getLogger(__name__)

# Create the main app and console
app = typer.Typer(
    help="qseries-j - Exact q-series for the generalized Ramanujan J functions",
    no_args_is_help=True,
)
console = Console()

USAGE_ERRORS = (ConfigError, NotPrime, UnsupportedPrime)

N_OPTION = typer.Option(None, "--n", help="Prime N, or a comma-separated list")
ORDER_OPTION = typer.Option(
    None,
    "--order",
    envvar="QSERIES_J_ORDER",
    help=f"Truncation order T (default {DEFAULT_ORDER} powers of q)",
)
FORMAT_OPTION = typer.Option(
    "text", "--format", envvar="QSERIES_J_FORMAT", help="Output format: json or text"
)
OUT_OPTION = typer.Option(None, "--out", help="Write the output to this file")


@contextmanager
def _command(build: Callable[[], CliConfig]) -> Iterator[CliConfig]:
    """Build and validate the config, mapping library errors onto exit codes."""
    try:
        yield build().validate()
    except USAGE_ERRORS as e:
        console.print(f"[red]{ICONS['error']} {escape(str(e))}[/red]")
        raise typer.Exit(2)
    except OSError as e:
        console.print(f"[red]{ICONS['error']} Cannot write output: {escape(str(e))}[/red]")
        raise typer.Exit(2)
    except QSeriesError as e:
        logger.error(f"Command failed: {e}")
        console.print(f"[red]{ICONS['error']} Command failed: {escape(str(e))}[/red]")
        raise typer.Exit(1)


def _emit(config: CliConfig, payload: Any, render: Callable[[Console], None]):
    """Write JSON or rich text to ``--out`` or stdout."""
    if config.is_json:
        text = json.dumps(payload, indent=2)
        if config.out:
            config.out.write_text(text + "\n")
        else:
            typer.echo(text)
        return
    if config.out:
        with config.out.open("w") as handle:
            render(Console(file=handle, width=200))
    else:
        render(console)


def _leading_json(series: ScaledSeries) -> Optional[list]:
    lead = series.leading_term()
    return None if lead is None else [lead[0], str(lead[1])]


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", help="Enable debug logging"),
):
    """qseries-j - Exact q-series for the generalized Ramanujan J functions."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.command()
def expand(
    n: Optional[str] = N_OPTION,
    order: Optional[int] = ORDER_OPTION,
    residue: Optional[int] = typer.Option(
        None, "--residue", help="Only show J_r for this residue"
    ),
    output_format: str = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """Print every nonzero J_r of N computed by multisection."""
    with _command(
        lambda: CliConfig("expand", parse_primes(n), order, residue, None, output_format, out)
    ) as config:
        trunc = config.order or DEFAULT_ORDER
        families = {}
        for N in config.primes:
            family = j_family(prime_context(N), trunc)
            families[N] = {
                r: series
                for r, series in family.items()
                if config.residue is None or r == config.residue
            }

        def render(out_console: Console):
            for N, family in families.items():
                out_console.print(
                    f"[bold blue]N={N}[/bold blue] "
                    f"({len(family)} nonzero J's, order q^{trunc})"
                )
                for r, series in family.items():
                    out_console.print(f"[cyan]J_{r}[/cyan] = {series.render()}")
                out_console.print()

        payload = [
            {
                "N": N,
                "order": trunc,
                "J": [
                    {"r": r, "leading": _leading_json(series), "series": series.to_json()}
                    for r, series in family.items()
                ],
            }
            for N, family in families.items()
        ]
        _emit(config, payload, render)


@app.command()
def table(
    n: Optional[str] = N_OPTION,
    output_format: str = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """Print the closed-form descriptors (A, p, sign, X, theta arguments) of N."""
    with _command(
        lambda: CliConfig("table", parse_primes(n), None, None, None, output_format, out)
    ) as config:
        forms = [form for N in config.primes for form in closed_forms(prime_context(N))]

        def render(out_console: Console):
            for N in config.primes:
                grid = Table(title=f"J functions for N={N}")
                grid.add_column("A", style="cyan", justify="right")
                grid.add_column("p", style="magenta", justify="right")
                grid.add_column("sign", justify="right")
                grid.add_column("X", justify="right")
                grid.add_column("J_p", style="green")
                for form in forms:
                    if form.N == N:
                        grid.add_row(
                            str(form.A),
                            str(form.p),
                            "+1" if form.sign > 0 else "-1",
                            str(form.X),
                            form.formula(),
                        )
                out_console.print(grid)

        _emit(config, [form.to_json() for form in forms], render)


@app.command()
def verify(
    n: Optional[str] = N_OPTION,
    order: Optional[int] = typer.Option(
        None,
        "--order",
        envvar="QSERIES_J_ORDER",
        help="Order override; each check's default when omitted (cyclotomic checks count powers of q^(1/N))",
    ),
    filter_prefix: Optional[str] = typer.Option(
        None, "--filter", help="Only run checks whose id starts with this prefix"
    ),
    output_format: str = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """Run the identity suite; exit 0 if every check passes, 1 otherwise."""
    with _command(
        lambda: CliConfig("verify", parse_primes(n), order, None, filter_prefix, output_format, out)
    ) as config:
        suite = run_suite(config.filter, config.order, config.primes or DEFAULT_PRIMES)

        def render(out_console: Console):
            grid = Table(title="Identity checks")
            grid.add_column("Check", style="cyan")
            grid.add_column("Result")
            grid.add_column("Cases", justify="right")
            grid.add_column("Order", justify="right")
            grid.add_column("First bad exponent")
            for report in suite.reports:
                if report.error is not None:
                    status = f"[yellow]{ICONS['warning']} error[/yellow]"
                elif report.passed:
                    status = f"[green]{ICONS['check']} pass[/green]"
                else:
                    status = f"[red]{ICONS['error']} fail[/red]"
                detail = report.error or (
                    "" if report.first_bad_exponent is None else str(report.first_bad_exponent)
                )
                grid.add_row(report.id, status, str(len(report.cases)), str(report.trunc), detail)
            out_console.print(grid)
            colour = "green" if suite.passed else "red"
            out_console.print(f"[bold {colour}]{suite.summary()}[/bold {colour}]")

        _emit(config, suite.to_json(), render)
        if not suite.passed:
            raise typer.Exit(1)


@app.command()
def theta(
    n: Optional[str] = N_OPTION,
    order: Optional[int] = ORDER_OPTION,
    output_format: str = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """Print the theta functions in the closed forms of N, checked against product form."""
    with _command(
        lambda: CliConfig("theta", parse_primes(n), order, None, None, output_format, out)
    ) as config:
        trunc = config.order or DEFAULT_ORDER
        rows = []
        for N in config.primes:
            pairs = set()
            for form in closed_forms(prime_context(N)):
                if form.theta_num is not None:
                    pairs.update((form.theta_num, form.theta_den))
            for a, b in sorted(pairs):
                x, y = ThetaArg.neg_power(a), ThetaArg.neg_power(b)
                series = theta_sum(x, y, trunc)
                agrees = compare(series, theta_product(x, y, trunc)).passed
                rows.append(
                    {
                        "N": N,
                        "pair": [a, b],
                        "label": f"f({x}, {y})",
                        "series": series,
                        "product_agrees": agrees,
                    }
                )

        def render(out_console: Console):
            for row in rows:
                mark = (
                    f"[green]{ICONS['check']}[/green]"
                    if row["product_agrees"]
                    else f"[red]{ICONS['error']}[/red]"
                )
                out_console.print(
                    f"{mark} N={row['N']} [cyan]{row['label']}[/cyan] = "
                    f"{row['series'].render(max_terms=12)}"
                )

        payload = [{**row, "series": row["series"].to_json()} for row in rows]
        _emit(config, payload, render)
        if not all(row["product_agrees"] for row in rows):
            raise typer.Exit(1)


@app.command()
def partitions(
    order: Optional[int] = typer.Option(
        None, "--order", envvar="QSERIES_J_ORDER", help="Number of terms"
    ),
    n: Optional[str] = typer.Option(None, "--n", help="Modulus for the multisection"),
    residue: Optional[int] = typer.Option(
        None, "--residue", help="Residue r of p(Nn + r)"
    ),
    output_format: str = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """Print p(n) below the order, or sum p(Nn + r) q^n with --n and --residue."""
    with _command(
        lambda: CliConfig("partitions", parse_primes(n), order, residue, None, output_format, out)
    ) as config:
        trunc = config.order or DEFAULT_ORDER
        if config.primes:
            N = config.primes[0]
            generating = dilate(partition_series(N * trunc), Fraction(1, N))
            series = multisect(generating, N, config.residue)
            label = f"p({N}n+{config.residue})"
        else:
            series = partition_series(trunc)
            label = "p(n)"
        values = series.coefficients()

        def render(out_console: Console):
            grid = Table(title=f"{label} for n < {len(values)}")
            grid.add_column("n", justify="right", style="cyan")
            grid.add_column(label, justify="right", style="green")
            for index, value in enumerate(values):
                grid.add_row(str(index), str(value))
            out_console.print(grid)

        _emit(config, {"label": label, "values": [str(v) for v in values]}, render)


def cli_main():
    """Entry point for the CLI that doesn't require context."""
    app()


if __name__ == "__main__":
    cli_main()
