# -*- coding: utf-8 -*-
"""
Closed-form utilities of the canonical profiles and their deviations.

Values are only offered where the profile's parameter conditions hold and
under the type-agnostic prior. Each one equals what the exact oracle computes.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from core_game.actions import RoundAction
from core_game.params import GameParams
from core_payoff.probability import expected_checks_unpivotal, prob_pivot_given_byzantine_proposer
from core_payoff.recurrences import checker_continuation, hazard, pi_send
from core_payoff.thresholds import validity_conditions_hold
from core_utils.enum import SendRule

__all__ = ["ClosedForm", "closed_form"]

NOCHECK_NEVER = (False, SendRule.NEVER)
NOCHECK_ALWAYS = (False, SendRule.ALWAYS)
CHECK_IFF_VALID = (True, SendRule.IFF_VALID)
CHECK_IFF_INVALID = (True, SendRule.IFF_INVALID)
CHECK_ALWAYS = (True, SendRule.ALWAYS)
CHECK_NEVER = (True, SendRule.NEVER)


@dataclass(frozen=True)
class ClosedForm:
    name: str
    value: Fraction


def _prop1(params: GameParams, player: int, round_: int, behaviour: Optional[Tuple]) -> Optional[ClosedForm]:
    if round_ != 1:
        return None
    R, c_check, c_send, kappa = params.reward, params.cost_check, params.cost_send, params.kappa
    if player == 1:
        return ClosedForm("prop1_proposer", R - c_check - c_send) if behaviour is None else None
    p = Fraction(params.f, params.n)
    values = {
        None: R - c_send - p * kappa,
        NOCHECK_NEVER: -p * kappa,
        CHECK_IFF_VALID: -c_check + (1 - p) * (R - c_send) - p * kappa,
        CHECK_IFF_INVALID: -c_check + p * (R - c_send - kappa),
        CHECK_ALWAYS: R - c_send - p * kappa - c_check,
        CHECK_NEVER: -c_check - p * kappa,
    }
    return ClosedForm(f"prop1_{_key(behaviour)}", values[behaviour]) if behaviour in values else None


def _prop2(params: GameParams, player: int, round_: int, behaviour: Optional[Tuple]) -> Optional[ClosedForm]:
    if behaviour is None:
        return ClosedForm("prop2_equilibrium", Fraction(0))
    if player == round_:
        return None
    R, c_check, c_send, kappa = params.reward, params.cost_check, params.cost_send, params.kappa
    p_invalid = Fraction(params.f, params.n)
    pivotal = 1 if params.f == params.nu - 1 else 0
    values = {
        NOCHECK_ALWAYS: -c_send + p_invalid * pivotal * (R - kappa),
        CHECK_IFF_VALID: -c_check - (1 - p_invalid) * c_send,
        CHECK_IFF_INVALID: -c_check + p_invalid * (pivotal * (R - kappa) - c_send),
        CHECK_ALWAYS: -c_send - c_check + p_invalid * pivotal * (R - kappa),
        CHECK_NEVER: -c_check,
    }
    return ClosedForm(f"prop2_{_key(behaviour)}", values[behaviour]) if behaviour in values else None


def _prop4(params: GameParams, player: int, round_: int, behaviour: Optional[Tuple]) -> Optional[ClosedForm]:
    n, f = params.n, params.f
    R, c_check, c_send, kappa = params.reward, params.cost_check, params.cost_send, params.kappa
    if player < f + 2 or round_ > f + 1:
        return None
    if round_ == f + 1:
        values = {
            None: R - c_send,
            NOCHECK_NEVER: Fraction(0),
            CHECK_IFF_VALID: R - c_send - c_check,
            CHECK_ALWAYS: R - c_send - c_check,
            CHECK_NEVER: -c_check,
            CHECK_IFF_INVALID: -c_check,
        }
        return ClosedForm(f"prop4_final_{_key(behaviour)}", values[behaviour]) if behaviour in values else None

    h = hazard(n, f, round_)
    if player <= params.last_checker_index:
        continuation = checker_continuation(params, round_ + 1)
        if behaviour is None:
            return ClosedForm("prop4_checker_equilibrium", checker_continuation(params, round_))
        if behaviour == NOCHECK_NEVER:
            return ClosedForm("prop4_checker_abstain", h * continuation)
        if behaviour == CHECK_NEVER:
            return ClosedForm("prop4_checker_check_silent", -c_check + h * continuation)
        if behaviour in (NOCHECK_ALWAYS, CHECK_ALWAYS):
            pivot = prob_pivot_given_byzantine_proposer(n, f, params.nu, round_)
            later_checks = expected_checks_unpivotal(n, f, params.nu, round_)
            value = (R - c_send) - h * pivot * kappa - h * (1 - pivot) * (later_checks * c_check + c_send)
            if behaviour == CHECK_ALWAYS:
                return ClosedForm("prop4_checker_check_and_send", value - c_check)
            return ClosedForm("prop4_checker_send_blind", value)
        return None

    continuation = pi_send(params, round_ + 1)
    if behaviour is None:
        return ClosedForm("prop4_sender_equilibrium", pi_send(params, round_))
    if behaviour == NOCHECK_NEVER:
        return ClosedForm("prop4_sender_abstain", h * continuation)
    if behaviour == CHECK_IFF_VALID:
        return ClosedForm("prop4_sender_check", -c_check + (1 - h) * (R - c_send) + h * continuation)
    return None


def _key(behaviour: Optional[Tuple]) -> str:
    if behaviour is None:
        return "equilibrium"
    check, rule = behaviour
    return f"{'check' if check else 'nocheck'}_{rule.value}"


def closed_form(profile_name: str, params: GameParams, player: int, round_: int,
                action: Optional[RoundAction] = None, is_proposer: bool = False) -> Optional[ClosedForm]:
    """
    Closed-form utility of ``player`` from ``round_`` on, for the equilibrium
    (``action is None``) or for a one-shot deviation to ``action``.

    Returns ``None`` when no closed form covers the case.

    Examples
    --------
    >>> params = GameParams(n=10, f=4, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> closed_form("prop1", params, 5, 1).value
    Fraction(1, 1)

    """
    if is_proposer and action is not None:
        return None
    behaviour = None if action is None else action.behaviour
    n, f, nu = params.n, params.f, params.nu
    if profile_name == "prop1" and f >= 1 and f >= nu and n - f >= nu + 1:
        return _prop1(params, player, round_, behaviour)
    if profile_name == "prop2" and 1 <= f < nu and n - f >= nu:
        return _prop2(params, player, round_, behaviour)
    if profile_name == "prop4" and validity_conditions_hold(params):
        return _prop4(params, player, round_, behaviour)
    return None
