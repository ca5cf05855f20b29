# -*- coding: utf-8 -*-
"""
Which equilibrium statements apply to a parameter point.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from core_game.params import GameParams, validate_ranges
from core_payoff.thresholds import (
    kappa_threshold,
    kappa_threshold_exact,
    kappa_threshold_terminal,
    reward_threshold,
    validity_conditions_hold,
)
from core_utils.enum import Regime
from core_utils.error import AnalyticDivisionByZero

__all__ = ["Condition", "RegimeClassification", "classify_regime", "PREDICTED_PROPERTIES"]

# (termination, validity) an equilibrium of the regime delivers.
PREDICTED_PROPERTIES = {
    Regime.INVALID_ACCEPTANCE: (True, False),
    Regime.COORDINATION_FAILURE: (False, True),
    Regime.VALIDITY_AND_TERMINATION: (True, True),
    Regime.NO_BYZANTINE: (True, True),
    Regime.UNCLASSIFIED: (None, None),
}


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool
    margin: Optional[Fraction] = None

    def as_record(self) -> dict:
        return {"condition": self.name, "holds": self.holds, "margin": self.margin}


@dataclass(frozen=True)
class RegimeClassification:
    params: GameParams
    regimes: Tuple[Regime, ...]
    conditions: Tuple[Condition, ...]
    kappa_threshold: Optional[Fraction] = None
    kappa_threshold_terminal: Optional[Fraction] = None
    kappa_threshold_exact: Optional[Fraction] = None
    reward_threshold: Optional[Fraction] = None

    @property
    def regime(self) -> Regime:
        return self.regimes[0]

    def condition(self, name: str) -> Optional[Condition]:
        return next((condition for condition in self.conditions if condition.name == name), None)

    def as_record(self) -> dict:
        record = {
            "regimes": ",".join(regime.value for regime in self.regimes),
            "kappa_threshold": self.kappa_threshold,
            "kappa_threshold_terminal": self.kappa_threshold_terminal,
            "kappa_threshold_exact": self.kappa_threshold_exact,
            "reward_threshold": self.reward_threshold,
        }
        for condition in self.conditions:
            record[condition.name] = condition.holds
            if condition.margin is not None:
                record[f"{condition.name}_margin"] = condition.margin
        termination, validity = PREDICTED_PROPERTIES[self.regime]
        record["predicted_termination"] = termination
        record["predicted_validity"] = validity
        return record


def classify_regime(params: GameParams) -> RegimeClassification:
    """
    List every regime whose conditions hold, in the order invalid acceptance,
    coordination failure, validity and termination, no Byzantine.

    The ordering ``kappa > R > c_check > c_send`` is not required, so near-miss
    points of a sweep can still be classified. Margins are signed: positive
    means the condition holds with room to spare.

    ``kappa_above_exact_bound`` compares the penalty with the smallest one that
    deters blind sending by checkers seated from ``f + 2`` on. It is reported
    but does not enter the regime decision.

    Examples
    --------
    >>> params = GameParams(n=10, f=3, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> [regime.value for regime in classify_regime(params).regimes]
    ['coordination_failure_exists', 'validity_and_termination']

    """
    validate_ranges(params, allow_no_byzantine=True)
    n, f, nu = params.n, params.f, params.nu
    conditions = []
    regimes = []

    def add(name, holds, margin=None):
        conditions.append(Condition(name=name, holds=bool(holds), margin=margin))
        return bool(holds)

    has_byzantine = add("has_byzantine", f >= 1)
    byzantine_quorum = add("f_at_least_nu", f >= nu)
    rational_majority = add("n_minus_f_above_nu", n - f >= nu + 1)
    rational_quorum = add("n_minus_f_at_least_nu", n - f >= nu)

    if has_byzantine and byzantine_quorum and rational_majority:
        regimes.append(Regime.INVALID_ACCEPTANCE)
    if has_byzantine and not byzantine_quorum and rational_quorum:
        regimes.append(Regime.COORDINATION_FAILURE)

    threshold = terminal = exact = None
    reward_bound = reward_threshold(params)
    reward_ok = add("reward_above_threshold", params.reward >= reward_bound, params.reward - reward_bound)
    if validity_conditions_hold(params):
        exact = kappa_threshold_exact(params)
        add("kappa_above_exact_bound", params.kappa >= exact, params.kappa - exact)
        try:
            threshold = kappa_threshold(params)
            terminal = kappa_threshold_terminal(params)
        except AnalyticDivisionByZero:
            add("kappa_above_threshold", False)
        else:
            kappa_ok = add(
                "kappa_above_threshold",
                threshold is None or params.kappa > threshold,
                None if threshold is None else params.kappa - threshold,
            )
            add("kappa_above_terminal_bound", params.kappa > terminal, params.kappa - terminal)
            if kappa_ok and reward_ok:
                regimes.append(Regime.VALIDITY_AND_TERMINATION)
    if f == 0 and nu == 1:
        regimes.append(Regime.NO_BYZANTINE)
    if not regimes:
        regimes.append(Regime.UNCLASSIFIED)
    return RegimeClassification(
        params=params,
        regimes=tuple(regimes),
        conditions=tuple(conditions),
        kappa_threshold=threshold,
        kappa_threshold_terminal=terminal,
        kappa_threshold_exact=exact,
        reward_threshold=reward_bound,
    )
