"""
motkit command line.

    motkit [--verbose] stability --nmax 20 --out rep.json
    motkit ratio --nmax 10 --norm euclidean --format csv
    motkit check-order --measure-file a.json --measure-file b.json
    motkit export pi_mn --m 3 --n 4 --out pi.json

Exit codes: 0 on success or a true verdict, 1 on a false verdict or a
computation error, 2 on a usage error, 130 when interrupted.
"""
import logging
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated, Iterator, List, NoReturn, Optional

import typer

from motkit.config import get_settings
from motkit.errors import MotkitError, ParameterError
from motkit.experiments import run_lemma2, run_ratio, run_stability, run_variants
from motkit.experiments.lemma2 import default_thetas
from motkit.experiments.report import render_report
from motkit.constructions import mu3_P0, mu_m, nu_mn, pi_mn, pi_prime
from motkit.measure.io import dump_measure, load_measure
from motkit.models.construction_params import ConstructionParams
from motkit.models.coupling import CostSpec, Norm
from motkit.models.report import ExperimentReport
from motkit.runtime.graceful_exit import graceful_execution_context, install_signal_handlers
from motkit.telemetry import command_span, emit_exception_telemetry, init_telemetry
from motkit.transport import check_convex_order, is_martingale_coupling, mot_value, ot_value
from motkit.transport.io import SolveReport, dump_coupling, load_coupling

logger = logging.getLogger("motkit.cli")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

app = typer.Typer(
    name="motkit",
    help="Optimal and martingale optimal transport on finitely supported measures.",
    add_completion=False,
    no_args_is_help=True,
)


class ReportFormat(str, Enum):
    json = "json"
    csv = "csv"


class Construction(str, Enum):
    mu_m = "mu_m"
    nu_mn = "nu_mn"
    mu3_P0 = "mu3_P0"
    pi_mn = "pi_mn"
    pi_prime = "pi_prime"


OutOption = Annotated[Optional[Path], typer.Option("--out", help="Write the result here instead of stdout.")]
FormatOption = Annotated[ReportFormat, typer.Option("--format", help="Report encoding.")]
WorkersOption = Annotated[Optional[int], typer.Option("--workers", min=1, help="Threads for independent rows.")]
NormOption = Annotated[Norm, typer.Option("--norm", help="Norm defining the cost |x - y|.")]
MeasureFiles = Annotated[
    List[Path],
    typer.Option("--measure-file", exists=True, dir_okay=False, help="Measure JSON file; give it twice."),
]


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(text)
    else:
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info("Wrote %s", out)


def _fail(error: Exception) -> NoReturn:
    logger.error("%s: %s", type(error).__name__, error)
    typer.echo(f"error: {error}", err=True)
    raise typer.Exit(code=1)


@contextmanager
def _command(name: str) -> Iterator[None]:
    """
    Run a command body inside its span and the graceful-shutdown context.
    motkit errors are recorded on the span and exit 1.
    """
    with graceful_execution_context(), command_span(name):
        try:
            yield
        except MotkitError as e:
            emit_exception_telemetry(e)
            _fail(e)


def _finish(report: ExperimentReport, fmt: ReportFormat, out: Optional[Path]) -> None:
    _emit(render_report(report, fmt.value), out)
    if not report.verdict:
        failed = [row for row in report.rows if not row["pass"]]
        typer.echo(f"{report.name}: verdict false ({len(failed)} failing rows)", err=True)
        raise typer.Exit(code=1)


def _measure_pair(files: List[Path]):
    if len(files) != 2:
        raise typer.BadParameter("exactly two --measure-file options are required", param_hint="--measure-file")
    return load_measure(files[0]), load_measure(files[1])


@app.callback()
def configure(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at DEBUG level.")] = False,
) -> None:
    try:
        settings = get_settings()
    except ParameterError as e:
        _fail(e)
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level, logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    init_telemetry(settings.telemetry)
    install_signal_handlers()


@app.command()
def stability(
    nmax: Annotated[int, typer.Option("--nmax", min=2)] = 20,
    seed: Annotated[int, typer.Option("--seed")] = 0,
    workers: WorkersOption = None,
    out: OutOption = None,
    fmt: FormatOption = ReportFormat.json,
) -> None:
    """mu_3 against nu_{3,n}: W1 convergence without convergence of the MOT value."""
    with _command("stability"):
        report = run_stability(nmax, seed=seed, workers=workers)
        _finish(report, fmt, out)


@app.command()
def ratio(
    nmax: Annotated[int, typer.Option("--nmax", min=2)] = 10,
    norm: NormOption = Norm.EUCLIDEAN,
    workers: WorkersOption = None,
    out: OutOption = None,
    fmt: FormatOption = ReportFormat.json,
) -> None:
    """M1 / W1 along (mu_n, nu_{n,n})."""
    with _command("ratio"):
        report = run_ratio(nmax, CostSpec(norm), workers=workers)
        _finish(report, fmt, out)


@app.command()
def lemma2(
    m: Annotated[int, typer.Option("--m", min=1)] = 3,
    theta_count: Annotated[int, typer.Option("--theta-count", min=1)] = 10,
    workers: WorkersOption = None,
    out: OutOption = None,
    fmt: FormatOption = ReportFormat.json,
) -> None:
    """W1(mu_m P_0, mu_m P_theta) on a grid of angles in [0, pi/2]."""
    with _command("lemma2"):
        report = run_lemma2(m, default_thetas(theta_count), workers=workers)
        _finish(report, fmt, out)


@app.command()
def variants(
    m: Annotated[int, typer.Option("--m")] = 3,
    n: Annotated[int, typer.Option("--n")] = 3,
    grid: Annotated[int, typer.Option("--grid")] = 2,
    eps: Annotated[float, typer.Option("--eps")] = 0.3,
    out: OutOption = None,
    fmt: FormatOption = ReportFormat.json,
) -> None:
    """Parallelogram and mixture versions of the construction."""
    with _command("variants"):
        params = ConstructionParams(m=m, n=n, eps=eps, grid=grid)
        report = run_variants(params.m, params.n, params.grid, params.eps)
        _finish(report, fmt, out)


@app.command("solve-ot")
def solve_ot(
    measure_file: MeasureFiles,
    norm: NormOption = Norm.EUCLIDEAN,
    out: OutOption = None,
) -> None:
    """Optimal transport value and plan between two measure files."""
    with _command("solve-ot"):
        mu, nu = _measure_pair(measure_file)
        value, plan = ot_value(mu, nu, CostSpec(norm), settings=get_settings().solver)
        _emit(SolveReport.build("ot", norm.value, value, plan).model_dump_json(indent=2), out)


@app.command("solve-mot")
def solve_mot(
    measure_file: MeasureFiles,
    norm: NormOption = Norm.EUCLIDEAN,
    out: OutOption = None,
) -> None:
    """Martingale optimal transport value and plan between two measure files."""
    with _command("solve-mot"):
        mu, nu = _measure_pair(measure_file)
        value, plan = mot_value(mu, nu, CostSpec(norm), settings=get_settings().solver)
        _emit(SolveReport.build("mot", norm.value, value, plan).model_dump_json(indent=2), out)


@app.command("check-order")
def check_order(
    measure_file: MeasureFiles,
    out: OutOption = None,
) -> None:
    """Print true iff the first measure is below the second in convex order."""
    with _command("check-order"):
        mu, nu = _measure_pair(measure_file)
        ordered = check_convex_order(mu, nu, get_settings().solver)
    _emit("true" if ordered else "false", out)
    if not ordered:
        raise typer.Exit(code=1)


@app.command("check-coupling")
def check_coupling(
    coupling_file: Annotated[Path, typer.Option("--coupling-file", exists=True, dir_okay=False)],
    out: OutOption = None,
) -> None:
    """Print true iff the coupling file holds a martingale coupling."""
    with _command("check-coupling"):
        martingale = is_martingale_coupling(load_coupling(coupling_file))
    _emit("true" if martingale else "false", out)
    if not martingale:
        raise typer.Exit(code=1)


@app.command()
def export(
    construction: Annotated[Construction, typer.Argument(help="Measure or coupling to write.")],
    m: Annotated[int, typer.Option("--m", min=1)] = 3,
    n: Annotated[int, typer.Option("--n", min=1)] = 3,
    out: OutOption = None,
) -> None:
    """Write a construction in the measure or coupling file format."""
    with _command("export"):
        if construction == Construction.mu_m:
            text = dump_measure(mu_m(m))
        elif construction == Construction.nu_mn:
            text = dump_measure(nu_mn(m, n))
        elif construction == Construction.mu3_P0:
            text = dump_measure(mu3_P0())
        elif construction == Construction.pi_mn:
            text = dump_coupling(pi_mn(m, n))
        else:
            text = dump_coupling(pi_prime())
        _emit(text, out)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        app(args=argv, prog_name="motkit")
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0


def run() -> None:
    sys.exit(main())
