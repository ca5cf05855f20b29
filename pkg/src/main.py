# -*- coding: utf-8 -*-
"""
Command line entry point. Every command reads a scenario file, runs the
matching handler and exits with the handler's exit code.

    python src/main.py verify --scenario scenarios/validity.env --seed 7
"""
import os
import sys
from pathlib import Path
from typing import Optional

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "layers", "core", "python"))

import typer  # noqa: E402

from core_api.reports import render_summary  # noqa: E402
from core_api.scenario import load_scenario  # noqa: E402
from core_api.responses import EXIT_CONFIG_ERROR, command_response, create_body  # noqa: E402
from core_api.utils import get_body, get_exit_code  # noqa: E402
from core_utils.enum import BeliefModel, EvaluationMode, ReportFormat  # noqa: E402
from core_utils.error import ScenarioError  # noqa: E402
from lambdas.classify_regime.lambda_function import lambda_handler as classify_handler  # noqa: E402
from lambdas.payoff_analytics.lambda_function import lambda_handler as analytics_handler  # noqa: E402
from lambdas.simulate_height.lambda_function import lambda_handler as simulate_handler  # noqa: E402
from lambdas.sweep_grid.lambda_function import lambda_handler as sweep_handler  # noqa: E402
from lambdas.verify_equilibrium.lambda_function import lambda_handler as verify_handler  # noqa: E402

app = typer.Typer(add_completion=False, help="Simulate and verify the committee validation game.")

SCENARIO = typer.Option(..., "--scenario", help="Scenario file (KEY=value lines).")
SEED = typer.Option(None, "--seed", envvar="BFT_GAME_SEED", help="Seed of every random draw.")
TRIALS = typer.Option(None, "--trials", envvar="BFT_GAME_TRIALS", help="Monte Carlo sample size.")
MODE = typer.Option(None, "--mode", help="exact or mc.")
OUT = typer.Option(None, "--out", help="Report path; the report goes to stdout otherwise.")
FORMAT = typer.Option(None, "--format", help="csv or structured.")
WORKERS = typer.Option(None, "--workers", envvar="BFT_GAME_WORKERS", help="Sweep worker processes.")
BELIEF = typer.Option(None, "--belief", help="prior or own_type.")


def _dispatch(handler, scenario: Path, **options) -> None:
    try:
        values = load_scenario(str(scenario))
    except ScenarioError as error:
        response = command_response(create_body(None, message=error.message, error=str(EXIT_CONFIG_ERROR)),
                                    EXIT_CONFIG_ERROR)
    else:
        response = handler({"scenario": values, "options": options}, None)
    body = get_body(response)
    exit_code = get_exit_code(response)
    if body["response_code"] != "0":
        typer.echo(body["description"], err=True)
        raise typer.Exit(exit_code)
    result = body["response"]
    typer.echo(result["report"] if result.get("report") else render_summary(result["summary"]), nl=False)
    if not result.get("report"):
        typer.echo("")
    raise typer.Exit(exit_code)


@app.command()
def simulate(scenario: Path = SCENARIO, seed: Optional[int] = SEED, out: Optional[str] = OUT,
             report_format: Optional[ReportFormat] = FORMAT):
    """Run one height, or a batch of sampled seatings, and report the traces."""
    _dispatch(simulate_handler, scenario, seed=seed, out=out, format=report_format)


@app.command()
def analytics(scenario: Path = SCENARIO, out: Optional[str] = OUT,
              report_format: Optional[ReportFormat] = FORMAT):
    """Tabulate the recurrences, probabilities and thresholds per round."""
    _dispatch(analytics_handler, scenario, out=out, format=report_format)


@app.command()
def classify(scenario: Path = SCENARIO, out: Optional[str] = OUT,
             report_format: Optional[ReportFormat] = FORMAT):
    """Name the regimes whose conditions hold."""
    _dispatch(classify_handler, scenario, out=out, format=report_format)


@app.command()
def verify(scenario: Path = SCENARIO, seed: Optional[int] = SEED, trials: Optional[int] = TRIALS,
           mode: Optional[EvaluationMode] = MODE, belief: Optional[BeliefModel] = BELIEF,
           out: Optional[str] = OUT, report_format: Optional[ReportFormat] = FORMAT):
    """Check every one-shot deviation; exit 4 on a profitable one, 5 when inconclusive."""
    _dispatch(verify_handler, scenario, seed=seed, trials=trials, mode=mode, belief=belief,
              out=out, format=report_format)


@app.command()
def sweep(scenario: Path = SCENARIO, seed: Optional[int] = SEED, trials: Optional[int] = TRIALS,
          mode: Optional[EvaluationMode] = MODE, workers: Optional[int] = WORKERS,
          out: Optional[str] = OUT, report_format: Optional[ReportFormat] = FORMAT):
    """Classify, and optionally verify, every point of the scenario grid."""
    _dispatch(sweep_handler, scenario, seed=seed, trials=trials, mode=mode, workers=workers,
              out=out, format=report_format, progress=True)


if __name__ == "__main__":
    app()
