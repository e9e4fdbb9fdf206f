"""Command-line interface.

Exit codes: 0 when everything passes (inconclusive allowed), 1 when any
verdict fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import SpecParseError, ZetadivError
from .exponents import bounds_report
from .harness import fuzz_campaign, parse_spec, recheck, run_experiment


@click.group()
def main():
    """Point-count divisibility workbench over finite fields."""


@main.command("run")
@click.argument("spec_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report here.")
@click.option("--budget", type=int, default=None, help="Override the evaluation budget.")
@click.option("--nu-max", type=int, default=None, help="Override the largest extension degree.")
@click.option("--workers", type=int, default=1, show_default=True,
              help="Counting threads; results are identical for any value.")
def run_cmd(spec_path, out, budget, nu_max, workers):
    """Run the experiment described by SPEC_PATH."""
    try:
        spec = parse_spec(Path(spec_path).read_bytes())
    except SpecParseError as exc:
        click.echo(f"spec error: {exc}", err=True)
        sys.exit(2)
    if budget is not None or nu_max is not None:
        from dataclasses import replace

        overrides = {}
        if budget is not None:
            overrides["budget"] = budget
        if nu_max is not None:
            overrides["nu_max"] = nu_max
        spec = replace(spec, **overrides)

    report = run_experiment(spec, workers=workers)

    if report.bounds is not None:
        b = report.bounds
        click.echo(f"bounds: mu={b.mu} lambda={b.lambda_} mu_j={list(b.mu_j)} kappa={b.kappa}")
    for verdict in report.verdicts:
        label = verdict["check"] + (f"[{verdict['table']}]" if "table" in verdict else "")
        suffix = f" ({verdict['reason']})" if "reason" in verdict else ""
        click.echo(f"{label}: {verdict['verdict']}{suffix}")
    if report.zeta_outcome is not None and report.zeta_outcome.zeta is not None:
        click.echo(f"zeta: {report.zeta_outcome.zeta}")
    for stage, message in report.stage_errors.items():
        click.echo(f"stage error [{stage}]: {message}", err=True)

    if out is not None:
        Path(out).write_text(report.to_json())
        click.echo(f"report written to {out}")
    click.echo(f"overall: {report.overall}")
    sys.exit(1 if report.overall == "fail" else 0)


@main.command("fuzz")
@click.option("--seed", type=int, required=True)
@click.option("--instances", type=int, required=True)
@click.option("--mutate", is_flag=True,
              help="Check against exponent mu+1; failures prove the checker bites.")
@click.option("--homogeneous", is_flag=True,
              help="Generate homogeneous systems and include projective checks.")
@click.option("--budget", type=int, default=10**7, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON summary here.")
@click.option("--reproducer-dir", type=click.Path(file_okay=False), default=".",
              show_default=True)
def fuzz_cmd(seed, instances, mutate, homogeneous, budget, workers, out, reproducer_dir):
    """Run a seeded random-system campaign."""
    summary = fuzz_campaign(
        seed=seed, instances=instances, mutate=mutate, homogeneous=homogeneous,
        budget=budget, workers=workers, reproducer_dir=reproducer_dir,
    )
    click.echo(summary.to_json(), nl=False)
    if out is not None:
        Path(out).write_text(summary.to_json())
    if mutate:
        # failures are the expected outcome; report but do not fail the run
        sys.exit(0)
    sys.exit(1 if summary.failures else 0)


@main.command("recheck")
@click.argument("report_path", type=click.Path(exists=True, dir_okay=False))
def recheck_cmd(report_path):
    """Recompute every verdict of a report from its stored witnesses."""
    try:
        report_dict = json.loads(Path(report_path).read_text())
    except json.JSONDecodeError as exc:
        click.echo(f"report parse error: {exc}", err=True)
        sys.exit(2)
    try:
        ok, problems = recheck(report_dict)
    except (SpecParseError, KeyError, ValueError, ZetadivError) as exc:
        click.echo(f"malformed report: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)
    for problem in problems:
        click.echo(f"discrepancy: {problem}", err=True)
    click.echo("recheck ok" if ok else "recheck FAILED")
    sys.exit(0 if ok else 1)


@main.command("bounds")
@click.option("--n", "n", type=int, required=True, help="Number of affine variables.")
@click.option("--degrees", required=True, help="Comma-separated degrees, e.g. 2,3,1")
def bounds_cmd(n, degrees):
    """Print mu, lambda, mu_j, kappa for a degree profile."""
    try:
        degs = [int(d) for d in degrees.split(",") if d.strip()]
        report = bounds_report(n, degs)
    except ValueError as exc:
        click.echo(f"invalid profile: {exc}", err=True)
        sys.exit(2)
    click.echo(f"mu = {report.mu}")
    click.echo(f"lambda = {report.lambda_}")
    click.echo(f"mu_j = {list(report.mu_j)}")
    click.echo(f"kappa = {report.kappa}")


if __name__ == "__main__":
    main()
