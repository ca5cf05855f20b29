# -*- coding: utf-8 -*-
"""
Parameter grid evaluation, in parallel when more than one worker is configured.
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List

from tqdm import tqdm

from core_api.scenario import Scenario
from core_equilibrium.verifier import verify_equilibrium
from core_payoff.regime import classify_regime
from core_utils.error import GameException
from core_utils.utils import get_logger

__all__ = ["evaluate_point", "run_sweep"]

LAYER_NAME = 'layer-api-sweep'
LOGGER = get_logger(LAYER_NAME)


def evaluate_point(scenario: Scenario, point: Dict[str, Any]) -> dict:
    """
    Classify one grid point and, when ``verify`` is among the analyses,
    check the scenario profile there. Failures become a ``status`` message.
    """
    row = {**point, "status": "ok"}
    try:
        classification = classify_regime(scenario.params_at(point, checked=False))
    except GameException as error:
        row["status"] = f"{type(error).__name__}: {error.message}"
        return row
    row.update(classification.as_record())
    if "verify" not in scenario.analyses:
        return row
    try:
        params = scenario.params_at(point)
        report = verify_equilibrium(
            params,
            scenario.build_profile(params),
            mode=scenario.mode,
            belief=scenario.belief,
            players=scenario.verify_players,
            rounds=scenario.verify_rounds,
            trials=scenario.trials,
            seed=scenario.seed,
            bound=scenario.exact_bound,
        )
    except GameException as error:
        row["status"] = f"{type(error).__name__}: {error.message}"
        row["verdict"] = None
        return row
    row["verdict"] = report.verdict.value
    row["profitable_deviations"] = len(report.profitable)
    row["inconclusive_deviations"] = len(report.inconclusive)
    row["largest_gain"] = max((entry.gain for entry in report.entries), default=None)
    return row


def _evaluate(arguments) -> dict:
    scenario, point = arguments
    return evaluate_point(scenario, point)


def run_sweep(scenario: Scenario, progress: bool = False) -> List[dict]:
    """
    Evaluate every grid point. Rows come back in grid order whatever the
    number of workers.
    """
    points = list(scenario.grid_points())
    LOGGER.info({"grid_points": len(points), "workers": scenario.workers})
    tasks = [(scenario, point) for point in points]
    if scenario.workers == 1:
        return [_evaluate(task) for task in tqdm(tasks, disable=not progress, desc="sweep")]
    with ProcessPoolExecutor(max_workers=scenario.workers) as executor:
        return list(tqdm(executor.map(_evaluate, tasks), total=len(tasks), disable=not progress, desc="sweep"))
