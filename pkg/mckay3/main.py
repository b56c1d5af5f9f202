import sys
from pathlib import Path
from typing import Optional, Tuple
import click
import typer
import typer.core
from rich.progress import BarColumn, Progress, TextColumn
from mckay3.impl.config import OutputFormat, RunConfig, get_config, get_threads, load_config, reset_config
from mckay3.impl.correspondence import predicted_intersection_matrix, verify_chain
from mckay3.impl.eta import eta_table
from mckay3.impl.kempf_ness import kempf_ness_solve
from mckay3.impl.group import equivalent_presentations
from mckay3.impl.mckay import cartan_matrices
from mckay3.impl.quiver import (
    chamber_survey, enumerate_fixed_points, invariant_subsets, is_generic, is_theta_semistable, is_theta_stable,
    random_constellation, relation_residual,
)
from mckay3.impl import report
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.quiver import StabilityParam, parse_zero_pattern
from mckay3.utils.cli import command, reports_errors, usage_error
from mckay3.utils.errors import Error, stderr
from mckay3.utils.log import setup_logging


class NaturalOrderGroup(typer.core.TyperGroup):
    def list_commands(self, ctx):
        return self.commands.keys()


app = typer.Typer(cls=NaturalOrderGroup, no_args_is_help=True, add_completion=False)

GROUP_HELP = 'group literal "1/r(w1,w2,w3)", r prime, w1+w2+w3 = 0 mod r'

_group_arg = typer.Argument(..., metavar="GROUP", help=GROUP_HELP)
_format_opt = typer.Option(None, "--format", help="report format [default: text]")
_theta_opt = typer.Option(None, "--theta", help='stability parameter, e.g. "-2,1,1"')
_seed_opt = typer.Option(None, "--seed", help="seed of the random constellation")
_zero_opt = typer.Option(None, "--zero", help='arrows to zero, e.g. "0:1,*:3"')


@app.callback()
@reports_errors
def _pre_command(config: Optional[Path] = typer.Option(None, "--config", help="YAML file of defaults (or $MCKAY3_CONFIG)"),
                 verbose: bool = typer.Option(False, "--verbose", "-v", help="log to stderr at DEBUG level")):
    """Exact and numerical workbench for the McKay correspondence of 1/r(w1,w2,w3)."""
    setup_logging(verbose)
    # each invocation starts from a fresh config
    reset_config()
    load_config(config)


def _run(command_name: str, group: str, **overrides) -> Tuple[RunConfig, GroupAction]:
    g = GroupAction.from_str(group)
    return get_config().merged(group=group, command=command_name, **overrides), g


def _require_theta(run: RunConfig) -> StabilityParam:
    if run.theta is None:
        raise usage_error(f"`{run.command}` needs --theta")
    return StabilityParam.from_str(run.theta)


def _finish(rep: report.Report, run: RunConfig) -> None:
    report.emit(rep, run.format)
    if not rep.ok:
        raise typer.Exit(code=1)


@command(app, name="cartan", alias="c", no_args_is_help=True)
@reports_errors
def cartan(group: str = _group_arg, fmt: Optional[OutputFormat] = _format_opt):
    """McKay-quiver matrices C~ and C, det C and C^-1"""
    run, g = _run("cartan", group, format=fmt)
    _finish(report.cartan_report(cartan_matrices(g), equivalent_presentations(g)), run)


@command(app, name="eta", alias="e", no_args_is_help=True)
@reports_errors
def eta(group: str = _group_arg, fmt: Optional[OutputFormat] = _format_opt):
    """Exact eta invariants eta_d of the flat bundles at infinity"""
    run, g = _run("eta", group, format=fmt)
    table = eta_table(g, threads=get_threads())
    _finish(report.eta_report(table), run)


@command(app, name="verify", alias="v", no_args_is_help=True)
@reports_errors
def verify(group: str = _group_arg, fmt: Optional[OutputFormat] = _format_opt):
    """Check the identity chain from eta invariants to -C^-1 exactly"""
    run, g = _run("verify", group, format=fmt)
    result = verify_chain(g, threads=get_threads())
    for failed in result.failures:
        stderr.print(f"[bold red]FAIL[/bold red] {failed.name}: {failed.lhs} != {failed.rhs} at {failed.witness}")
    _finish(report.verify_report(result), run)


@command(app, name="intersection", alias="i", no_args_is_help=True)
@reports_errors
def intersection(group: str = _group_arg, fmt: Optional[OutputFormat] = _format_opt):
    """Predicted intersection matrix -C^-1 with its triple-pairing reading"""
    run, g = _run("intersection", group, format=fmt)
    _finish(report.intersection_report(predicted_intersection_matrix(g)), run)


@command(app, name="stability", alias="st", no_args_is_help=True)
@reports_errors
def stability(group: str = _group_arg,
              theta: Optional[str] = _theta_opt,
              seed: Optional[int] = _seed_opt,
              zero: Optional[str] = _zero_opt,
              fmt: Optional[OutputFormat] = _format_opt):
    """Genericity of theta and theta-(semi)stability of a random constellation"""
    run, g = _run("stability", group, theta=theta, seed=seed, zero=zero, format=fmt)
    th = _require_theta(run)
    th.require_order(g)
    pattern = parse_zero_pattern(g, run.zero) if run.zero else None
    rep = random_constellation(g, run.seed, zero_pattern=pattern)
    payload = {
        "group": str(g),
        "theta": th.serialize(),
        "seed": run.seed,
        "zero": sorted([list(a) for a in pattern]) if pattern else [],
        "generic": is_generic(th).serialize(),
        "relation_residual": relation_residual(rep),
        "stable": is_theta_stable(rep, th).serialize(),
        "semistable": is_theta_semistable(rep, th).serialize(),
        "invariant_subsets": [sorted(s) for s in invariant_subsets(rep)],
    }
    _finish(report.stability_report(payload), run)


@command(app, name="solve", alias="s", no_args_is_help=True)
@reports_errors
def solve(group: str = _group_arg,
          theta: Optional[str] = _theta_opt,
          seed: Optional[int] = _seed_opt,
          zero: Optional[str] = _zero_opt,
          tol: Optional[float] = typer.Option(None, "--tol", help="residual target for ||mu - theta||_inf"),
          max_iter: Optional[int] = typer.Option(None, "--max-iter", help="Newton iteration cap"),
          history: bool = typer.Option(False, "--history", help="include the residual history"),
          fmt: Optional[OutputFormat] = _format_opt):
    """Solve mu(B) = theta in the gauge orbit of a random constellation"""
    run, g = _run("solve", group, theta=theta, seed=seed, zero=zero, format=fmt,
                  solver={"tol": tol, "max_iter": max_iter, "record_history": history or None})
    th = _require_theta(run)
    pattern = parse_zero_pattern(g, run.zero) if run.zero else None
    rep = random_constellation(g, run.seed, zero_pattern=pattern)
    result = kempf_ness_solve(rep, th, run.solver)
    _finish(report.solve_report(str(g), th, run.seed, result, with_history=run.solver.record_history), run)


@command(app, name="fixed-points", alias="fp", no_args_is_help=True)
@reports_errors
def fixed_points(group: str = _group_arg,
                 theta: Optional[str] = _theta_opt,
                 fmt: Optional[OutputFormat] = _format_opt):
    """Torus-fixed theta-stable constellations by arrow support"""
    run, g = _run("fixed-points", group, theta=theta, format=fmt)
    th = _require_theta(run)
    points = enumerate_fixed_points(g, th, threads=get_threads())
    _finish(report.fixed_points_report(str(g), th, points), run)


@command(app, name="chambers", alias="ch", no_args_is_help=True)
@reports_errors
def chambers(group: str = _group_arg,
             samples: Optional[int] = typer.Option(None, "--samples", help="number of sampled theta"),
             seed: Optional[int] = _seed_opt,
             bound: int = typer.Option(5, "--bound", help="sample integral theta_k in [-bound, bound]"),
             fmt: Optional[OutputFormat] = _format_opt):
    """Sample theta, report the genericity rate and fixed-point classes"""
    run, g = _run("chambers", group, samples=samples, seed=seed, format=fmt)
    threads = get_threads()
    with Progress(TextColumn("[progress.description]{task.description}"), BarColumn(),
                  TextColumn("{task.completed}/{task.total}"), console=stderr, transient=True) as progress:
        task = progress.add_task(f"sampling theta for {g}", total=run.samples)
        survey = chamber_survey(g, run.samples, run.seed, bound=bound, threads=threads,
                                on_sample=lambda: progress.advance(task))
    _finish(report.chambers_report(survey), run)


def main():
    try:
        app()
    except Error as e:
        e.display_error()
        sys.exit(e.exit_code)
