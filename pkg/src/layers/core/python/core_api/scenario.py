# -*- coding: utf-8 -*-
"""
Scenario files: versioned ``KEY=value`` documents describing what to run.

Example::

    SCENARIO_VERSION=1
    N=10
    F=2
    NU=4
    REWARD=10
    COST_CHECK=2
    COST_SEND=1
    KAPPA=100
    PROFILE=prop4
    ASSIGNMENT=worst-case
    ANALYSES=simulate,analytics,classify
    GRID_KAPPA=12,14,20

"""
import os
import re
from itertools import product
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict

from core_game.actions import parse_action
from core_game.assignment import ByzantineAssignment, worst_case_assignment
from core_game.params import MONETARY_FIELDS, GameParams
from core_game.strategy import StrategyProfile
from core_protocol.profiles import CANONICAL_PROFILES, get_profile, profile_from_table
from core_utils import environment
from core_utils.enum import AssignmentKind, BeliefModel, EvaluationMode, ReportFormat
from core_utils.error import GameException, ScenarioError
from core_utils.utils import cast_fraction, get_logger, parse_int_list, parse_value_list

__all__ = [
    "SCENARIO_VERSION",
    "ANALYSES",
    "Scenario",
    "load_scenario",
    "parse_scenario",
]

LAYER_NAME = 'layer-api-scenario'
LOGGER = get_logger(LAYER_NAME)

SCENARIO_VERSION = 1
ANALYSES = ("simulate", "analytics", "classify", "verify")
TABLE_PROFILE = "table"

PARAM_KEYS = {
    "N": "n",
    "F": "f",
    "NU": "nu",
    "REWARD": "reward",
    "COST_CHECK": "cost_check",
    "COST_SEND": "cost_send",
    "KAPPA": "kappa",
}
OPTION_KEYS = {
    "seed": "SEED",
    "trials": "TRIALS",
    "mode": "MODE",
    "out": "OUTPUT",
    "format": "FORMAT",
    "workers": "WORKERS",
    "belief": "BELIEF",
}
PLAIN_KEYS = {
    "SCENARIO_VERSION", "HEIGHT", "PROFILE", "ASSIGNMENT", "ASSIGNMENT_SEED", "ASSIGNMENT_TRIALS",
    "ANALYSES", "MODE", "BELIEF", "TRIALS", "SEED", "EXACT_BOUND", "WORKERS", "MAX_ROUNDS",
    "VERIFY_PLAYERS", "VERIFY_ROUNDS", "OUTPUT", "FORMAT", *PARAM_KEYS,
}
STRATEGY_KEY = re.compile(r"^STRATEGY_(DEFAULT|\d+)(?:_ROUND_(\d+))?$")
PROPOSE_KEY = re.compile(r"^PROPOSE_(\d+)$")
GRID_KEY = re.compile(r"^GRID_([A-Z_]+)$")


class Scenario(BaseModel):
    """Resolved scenario. ``fields`` are the parameter values before the grid applies."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    version: int
    fields: Dict[str, Any]
    profile: str = "prop4"
    table: Tuple[Tuple[int, Optional[int], str], ...] = ()
    proposals: Tuple[Tuple[int, bool], ...] = ()
    assignment: AssignmentKind = AssignmentKind.WORST_CASE
    assignment_indexes: Tuple[int, ...] = ()
    assignment_seed: int = environment.DEFAULT_SEED
    assignment_trials: int = 1
    analyses: Tuple[str, ...] = ("simulate",)
    mode: EvaluationMode = EvaluationMode.EXACT
    belief: BeliefModel = BeliefModel.PRIOR
    trials: int = environment.DEFAULT_TRIALS
    seed: int = environment.DEFAULT_SEED
    exact_bound: int = environment.EXACT_BOUND
    workers: int = environment.WORKERS
    max_rounds: Optional[int] = None
    verify_players: Optional[Tuple[int, ...]] = None
    verify_rounds: Optional[Tuple[int, ...]] = None
    output: Optional[str] = None
    report_format: ReportFormat = ReportFormat.STRUCTURED
    grid: Tuple[Tuple[str, Tuple[Any, ...]], ...] = ()

    @property
    def params(self) -> GameParams:
        """Validated parameters, raising ``ParamsError`` on a broken point."""
        return self.params_at({})

    def params_at(self, point: Mapping[str, Any], checked: bool = True) -> GameParams:
        """
        Parameters at one grid point. A field given only through a
        ``GRID_<FIELD>`` axis must be part of ``point``.

        Raises
        ------
        ScenarioError
            A parameter has no value outside the grid.

        """
        fields = {**self.fields, **point}
        missing = [key for key, name in PARAM_KEYS.items() if name not in fields]
        if missing:
            raise ScenarioError(f"{missing} are only given as grid axes, this command needs a single value")
        return GameParams(**fields) if checked else GameParams.unchecked(**fields)

    def grid_points(self) -> Iterator[Dict[str, Any]]:
        """Cartesian product of the grid axes in declaration order."""
        if not self.grid:
            raise ScenarioError("the scenario declares no GRID_<FIELD> axis")
        names = [name for name, _ in self.grid]
        for values in product(*(values for _, values in self.grid)):
            yield dict(zip(names, values))

    def build_profile(self, params: GameParams) -> StrategyProfile:
        if self.profile != TABLE_PROFILE:
            return get_profile(self.profile, params)
        table = {(index, round_): parse_action(text) for index, round_, text in self.table}
        return profile_from_table(params, table, dict(self.proposals), name=TABLE_PROFILE)

    def build_assignment(self, params: GameParams) -> ByzantineAssignment:
        """The fixed seating of an explicit or worst-case scenario."""
        if self.assignment is AssignmentKind.EXPLICIT:
            if len(self.assignment_indexes) != params.f:
                raise ScenarioError(
                    f"ASSIGNMENT lists {len(self.assignment_indexes)} indexes but f={params.f}"
                )
            return ByzantineAssignment.of(params.n, self.assignment_indexes)
        return worst_case_assignment(params.n, params.f)

    def resolved_config(self) -> dict:
        return self.model_dump()


def _integer(values: Mapping[str, str], key: str, default: Optional[int] = None) -> Optional[int]:
    raw = values.get(key)
    if raw is None or str(raw).strip() == "":
        return default
    try:
        return int(str(raw).strip())
    except ValueError:
        raise ScenarioError(f"{key}='{raw}' is not an integer")


def _choice(enum_cls, values: Mapping[str, str], key: str, default):
    raw = values.get(key)
    if raw is None or str(raw).strip() == "":
        return default
    try:
        return enum_cls(str(raw).strip().lower())
    except ValueError:
        choices = [member.value for member in enum_cls]
        raise ScenarioError(f"{key}='{raw}' is not one of {choices}")


def _parse_field(name: str, raw: str) -> Any:
    if name in MONETARY_FIELDS:
        return cast_fraction(raw)
    try:
        return int(str(raw).strip())
    except ValueError:
        raise ScenarioError(f"{name}='{raw}' is not an integer")


def _parse_tables(values: Mapping[str, str]):
    table, proposals = [], []
    for key, raw in values.items():
        strategy = STRATEGY_KEY.match(key)
        if strategy:
            index = 0 if strategy.group(1) == "DEFAULT" else int(strategy.group(1))
            round_ = int(strategy.group(2)) if strategy.group(2) else None
            if index == 0 and round_ is not None:
                raise ScenarioError(f"{key}: the default strategy cannot be round specific")
            parse_action(raw)
            table.append((index, round_, str(raw).strip()))
            continue
        propose = PROPOSE_KEY.match(key)
        if propose:
            choice = str(raw).strip().lower()
            if choice not in ("valid", "invalid"):
                raise ScenarioError(f"{key}='{raw}' must be 'valid' or 'invalid'")
            proposals.append((int(propose.group(1)), choice == "valid"))
    return tuple(sorted(table, key=lambda row: (row[0], row[1] or 0))), tuple(sorted(proposals))


def _parse_grid(values: Mapping[str, str]):
    grid = []
    fields = dict(PARAM_KEYS)
    for key, raw in values.items():
        match = GRID_KEY.match(key)
        if not match:
            continue
        name = fields.get(match.group(1))
        if name is None:
            raise ScenarioError(f"{key}: cannot sweep '{match.group(1)}', expected one of {sorted(PARAM_KEYS)}")
        axis = tuple(_parse_field(name, item) for item in parse_value_list(raw))
        if not axis:
            raise ScenarioError(f"{key} is empty")
        grid.append((name, axis))
    return tuple(grid)


def parse_scenario(values: Mapping[str, Optional[str]], overrides: Optional[Mapping[str, Any]] = None) -> Scenario:
    """
    Build a scenario from raw ``KEY=value`` pairs.

    Parameters
    ----------
    values : mapping
        Keys as written in the file.
    overrides : mapping, optional
        Command options (``seed``, ``trials``, ``mode``, ``out``, ``format``,
        ``workers``, ``belief``) that win over the file.

    Raises
    ------
    ScenarioError
        Unknown keys, unsupported version, malformed values.

    """
    values = {str(key).strip().upper(): ("" if value is None else str(value)) for key, value in values.items()}
    for option, value in (overrides or {}).items():
        if value is not None and option in OPTION_KEYS:
            values[OPTION_KEYS[option]] = str(getattr(value, "value", value))

    unknown = sorted(
        key for key in values
        if key not in PLAIN_KEYS and not (STRATEGY_KEY.match(key) or PROPOSE_KEY.match(key) or GRID_KEY.match(key))
    )
    if unknown:
        raise ScenarioError(f"unknown scenario keys {unknown}")
    version = _integer(values, "SCENARIO_VERSION")
    if version != SCENARIO_VERSION:
        raise ScenarioError(f"SCENARIO_VERSION must be {SCENARIO_VERSION}, got {version}")

    grid = _parse_grid(values)
    swept = {name for name, _ in grid}
    fields: Dict[str, Any] = {"height": values.get("HEIGHT") or "k"}
    for key, name in PARAM_KEYS.items():
        raw = values.get(key, "").strip()
        if raw:
            fields[name] = _parse_field(name, raw)
        elif name not in swept:
            raise ScenarioError(f"{key} is required")

    profile = (values.get("PROFILE") or "prop4").strip().lower()
    if profile not in CANONICAL_PROFILES and profile != TABLE_PROFILE:
        raise ScenarioError(f"PROFILE='{profile}' is not one of {sorted(CANONICAL_PROFILES) + [TABLE_PROFILE]}")
    try:
        table, proposals = _parse_tables(values)
    except GameException as error:
        raise ScenarioError(error.message)
    if profile == TABLE_PROFILE and not table:
        raise ScenarioError("PROFILE=table needs STRATEGY_DEFAULT or STRATEGY_<i> entries")

    raw_assignment = (values.get("ASSIGNMENT") or AssignmentKind.WORST_CASE.value).strip().lower()
    indexes: Tuple[int, ...] = ()
    try:
        kind = AssignmentKind(raw_assignment)
    except ValueError:
        kind = AssignmentKind.EXPLICIT
        indexes = tuple(parse_int_list(raw_assignment))

    analyses = tuple(item.lower() for item in parse_value_list(values.get("ANALYSES") or "simulate"))
    unsupported = [item for item in analyses if item not in ANALYSES]
    if unsupported:
        raise ScenarioError(f"ANALYSES {unsupported} are not among {list(ANALYSES)}")

    verify_players = values.get("VERIFY_PLAYERS", "").strip()
    verify_rounds = values.get("VERIFY_ROUNDS", "").strip()
    trials = _integer(values, "TRIALS", environment.DEFAULT_TRIALS)
    workers = _integer(values, "WORKERS", environment.WORKERS)
    assignment_trials = _integer(values, "ASSIGNMENT_TRIALS", 1)
    if trials < 1 or workers < 1 or assignment_trials < 1:
        raise ScenarioError("TRIALS, WORKERS and ASSIGNMENT_TRIALS must be positive")

    scenario = Scenario(
        version=version,
        fields=fields,
        profile=profile,
        table=table,
        proposals=proposals,
        assignment=kind,
        assignment_indexes=indexes,
        assignment_seed=_integer(values, "ASSIGNMENT_SEED", environment.DEFAULT_SEED),
        assignment_trials=assignment_trials,
        analyses=analyses,
        mode=_choice(EvaluationMode, values, "MODE", EvaluationMode.EXACT),
        belief=_choice(BeliefModel, values, "BELIEF", BeliefModel.PRIOR),
        trials=trials,
        seed=_integer(values, "SEED", environment.DEFAULT_SEED),
        exact_bound=_integer(values, "EXACT_BOUND", environment.EXACT_BOUND),
        workers=workers,
        max_rounds=_integer(values, "MAX_ROUNDS"),
        verify_players=tuple(parse_int_list(verify_players)) if verify_players else None,
        verify_rounds=tuple(parse_int_list(verify_rounds)) if verify_rounds else None,
        output=(values.get("OUTPUT") or "").strip() or None,
        report_format=_choice(ReportFormat, values, "FORMAT", ReportFormat.STRUCTURED),
        grid=grid,
    )
    LOGGER.debug({"scenario": scenario.profile, "analyses": list(analyses), "grid": [name for name, _ in grid]})
    return scenario


def load_scenario(path: str) -> Dict[str, Optional[str]]:
    """
    Read the raw ``KEY=value`` pairs of a scenario file.

    Raises
    ------
    ScenarioError
        The file does not exist.

    """
    if not os.path.isfile(path):
        raise ScenarioError(f"scenario file '{path}' does not exist")
    return dict(dotenv_values(path))
