# -*- coding: utf-8 -*-
"""
Penalty and reward bounds under which the validity profile is an equilibrium.
"""
from fractions import Fraction
from typing import List, Optional

from core_game.params import GameParams
from core_payoff.probability import (
    expected_checks_unpivotal,
    prob_ib_below,
    prob_pivot_given_byzantine_proposer,
)
from core_payoff.recurrences import hazard, phi
from core_utils.error import AnalyticDivisionByZero, PreconditionViolated, RangeError
from core_utils.utils import get_logger

__all__ = [
    "validity_conditions_hold",
    "alpha",
    "beta",
    "kappa_bound",
    "kappa_threshold",
    "kappa_threshold_terminal",
    "kappa_bound_exact",
    "kappa_threshold_exact",
    "reward_threshold",
]

LAYER_NAME = 'layer-payoff-thresholds'
LOGGER = get_logger(LAYER_NAME)


def validity_conditions_hold(params: GameParams) -> bool:
    """``f < nu`` and ``n - f > nu`` with at least one Byzantine player."""
    return params.f >= 1 and params.f < params.nu and params.n - params.f > params.nu


def _checked(params: GameParams, t: int) -> Fraction:
    if not 1 <= t < params.f:
        raise RangeError(f"round {t} is outside 1..{params.f - 1}")
    q = prob_ib_below(params.n, params.f, params.nu, t)
    if q == 0:
        raise AnalyticDivisionByZero(f"probability of no Byzantine index above the checkers is 0 at round {t}")
    return q


def alpha(params: GameParams, t: int) -> Fraction:
    """
    Coefficient of ``c_check`` in the round ``t`` penalty bound. Only
    ``1 <= t < f`` is required; whether the bound is relevant for the
    parameters is decided by ``classify_regime``.

    Examples
    --------
    >>> params = GameParams(n=10, f=2, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> alpha(params, 1)
    Fraction(29, 4)

    """
    q = _checked(params, t)
    n, f = params.n, params.f
    numerator = (n - t + 1) * phi(n, f, t) - (f - t + 1) * (1 - q) * phi(n, f, t + 1)
    return numerator / ((f - t + 1) * q)


def beta(params: GameParams, t: int) -> Fraction:
    """Coefficient of ``c_send`` in the round ``t`` penalty bound."""
    q = _checked(params, t)
    return (1 - q) / q


def kappa_bound(params: GameParams, t: int) -> Fraction:
    return alpha(params, t) * params.cost_check - beta(params, t) * params.cost_send


def kappa_threshold(params: GameParams) -> Optional[Fraction]:
    """
    Largest round bound over ``1 <= t < f``, ``None`` when ``f = 1`` leaves no
    round to bound.
    """
    bounds: List[Fraction] = [kappa_bound(params, t) for t in range(1, params.f)]
    if not bounds:
        return None
    threshold = max(bounds)
    LOGGER.debug({"kappa_bounds": [str(bound) for bound in bounds], "threshold": str(threshold)})
    return threshold


def kappa_threshold_terminal(params: GameParams) -> Fraction:
    """
    Bound of the same shape for round ``t = f``, where a checker who deviates
    to blind sending would otherwise reach round ``f + 1`` at no checking cost.

    Examples
    --------
    >>> params = GameParams(n=10, f=2, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> kappa_threshold_terminal(params)
    Fraction(161, 8)

    """
    if params.f < 1:
        raise PreconditionViolated("the terminal bound needs at least one Byzantine player")
    n, f = params.n, params.f
    q = prob_ib_below(n, f, params.nu, f)
    if q == 0:
        raise AnalyticDivisionByZero(f"probability of no Byzantine index above the checkers is 0 at round {f}")
    return ((n - f + 1) * params.cost_check - (1 - q) * params.cost_send) / q


def kappa_bound_exact(params: GameParams, t: int) -> Fraction:
    """
    Penalty at which a checker seated from ``f + 2`` on is indifferent between
    checking and sending blind at round ``t``, ``1 <= t <= f``.

    Conditions on round ``t`` itself having a Byzantine proposer, so the
    pivot probability is ``prob_pivot_given_byzantine_proposer`` and the
    checks left after a short vote are ``expected_checks_unpivotal``.
    ``kappa_bound`` and ``kappa_threshold_terminal`` use ``prob_ib_below``
    instead and can lie above this value: penalties in between still deter
    the deviation.

    Examples
    --------
    >>> params = GameParams(n=10, f=2, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> kappa_bound_exact(params, 1)
    Fraction(105, 8)
    >>> kappa_bound_exact(params, 2)
    Fraction(18, 1)

    """
    if not validity_conditions_hold(params):
        raise PreconditionViolated("the exact bound needs 1 <= f < nu and n - f > nu")
    n, f, nu = params.n, params.f, params.nu
    if not 1 <= t <= f:
        raise RangeError(f"round {t} is outside 1..{f}")
    h = hazard(n, f, t)
    pivot = prob_pivot_given_byzantine_proposer(n, f, nu, t)
    short = 1 - pivot
    later_checks = expected_checks_unpivotal(n, f, nu, t)
    numerator = phi(n, f, t) * params.cost_check - h * short * (params.cost_send + later_checks * params.cost_check)
    return numerator / (h * pivot)


def kappa_threshold_exact(params: GameParams) -> Fraction:
    """Largest ``kappa_bound_exact`` over ``1 <= t <= f``."""
    bounds = [kappa_bound_exact(params, t) for t in range(1, params.f + 1)]
    LOGGER.debug({"kappa_bounds_exact": [str(bound) for bound in bounds]})
    return max(bounds)


def reward_threshold(params: GameParams) -> Fraction:
    """
    Smallest reward that keeps both checkers and blind senders participating.

    Examples
    --------
    >>> params = GameParams(n=10, f=3, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> reward_threshold(params)
    Fraction(27, 7)

    """
    if not 0 <= params.f < params.n:
        raise RangeError(f"f must satisfy 0 <= f < n, got f={params.f}, n={params.n}")
    ratio = Fraction(params.n, params.n - params.f)
    return max(ratio * params.cost_send, params.cost_send + ratio * params.cost_check)
