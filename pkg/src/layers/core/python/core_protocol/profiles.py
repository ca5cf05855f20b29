# -*- coding: utf-8 -*-
"""
The fixed Byzantine behaviour and the canonical rational profiles.

Every strategy here reads only the round, the player's index and whether it
proposes, so a profile prescribes the same action at every history of a round.
"""
from functools import partial
from typing import Callable, Dict, Mapping, Optional, Tuple

from core_game.actions import (
    ABSTAIN,
    CHECK_SEND_IF_INVALID,
    CHECK_SEND_IF_VALID,
    SEND_BLIND,
    RoundAction,
)
from core_game.info_set import InfoSet
from core_game.params import GameParams
from core_game.strategy import StrategyProfile
from core_utils.error import PreconditionViolated, ScenarioError

__all__ = [
    "byzantine_action",
    "byzantine_round_action",
    "profile_prescribed",
    "profile_prop1",
    "profile_prop2",
    "profile_prop4",
    "profile_from_table",
    "get_profile",
    "CANONICAL_PROFILES",
]

# (index, round) keys; round None is the index default.
ActionTable = Mapping[Tuple[int, Optional[int]], RoundAction]


def byzantine_action(info: InfoSet) -> RoundAction:
    """
    Byzantine players propose invalid blocks and vote exactly for invalid ones.

    Examples
    --------
    >>> from core_utils.enum import PlayerType
    >>> byzantine_action(InfoSet.initial(1, PlayerType.BYZANTINE)).propose_valid
    False

    """
    return byzantine_round_action(info.player_index, info.round)


_BYZANTINE_PROPOSAL = CHECK_SEND_IF_INVALID.with_proposal(False)


def byzantine_round_action(index: int, round_: int) -> RoundAction:
    return _BYZANTINE_PROPOSAL if index == round_ else CHECK_SEND_IF_INVALID


def _proposer_checks(info: InfoSet) -> RoundAction:
    return CHECK_SEND_IF_VALID.with_proposal(True)


def _prescribed(info: InfoSet) -> RoundAction:
    if info.is_proposer:
        return _proposer_checks(info)
    return CHECK_SEND_IF_VALID


def _blind_sender(info: InfoSet) -> RoundAction:
    if info.is_proposer:
        return _proposer_checks(info)
    return SEND_BLIND


def _silent(info: InfoSet) -> RoundAction:
    if info.is_proposer:
        return ABSTAIN.with_proposal(True)
    return ABSTAIN


def _validity_profile(f: int, last_checker: int, info: InfoSet) -> RoundAction:
    if info.is_proposer:
        return _proposer_checks(info)
    if info.round <= f and info.player_index <= last_checker:
        return CHECK_SEND_IF_VALID
    return SEND_BLIND


def _uniform(name: str, params: GameParams, strategy: Callable[[InfoSet], RoundAction]) -> StrategyProfile:
    return StrategyProfile(name=name, n=params.n, strategies={i: strategy for i in params.players},
                            history_free=True)


def profile_prescribed(params: GameParams) -> StrategyProfile:
    """Everybody checks and sends iff the block is valid."""
    return _uniform("prescribed", params, _prescribed)


def profile_prop1(params: GameParams) -> StrategyProfile:
    """Proposers check, everybody else sends without checking."""
    return _uniform("prop1", params, _blind_sender)


def profile_prop2(params: GameParams) -> StrategyProfile:
    """Nobody checks and nobody sends; proposers still propose valid blocks."""
    return _uniform("prop2", params, _silent)


def profile_prop4(params: GameParams) -> StrategyProfile:
    """
    Indexes up to ``n - nu + f + 1`` check and send iff valid during rounds
    ``1..f``; higher indexes send blindly. From round ``f + 1`` everybody but
    the proposer sends blindly.

    Raises
    ------
    PreconditionViolated
        Unless ``f < nu`` and ``n - f > nu``.
    """
    if not (params.f < params.nu and params.n - params.f > params.nu):
        raise PreconditionViolated(
            f"the validity profile needs f < nu < n - f, got n={params.n}, f={params.f}, nu={params.nu}"
        )
    strategy = partial(_validity_profile, params.f, params.last_checker_index)
    return _uniform("prop4", params, strategy)


def _table_strategy(table: ActionTable, proposals: Mapping[int, bool], index: int, info: InfoSet) -> RoundAction:
    action = table.get((index, info.round)) or table.get((index, None)) or table.get((0, None))
    if action is None:
        raise ScenarioError(f"no action for player {index} in round {info.round}")
    if info.is_proposer:
        return action.with_proposal(proposals.get(index, True))
    return action


def profile_from_table(params: GameParams, table: ActionTable,
                       proposals: Optional[Mapping[int, bool]] = None,
                       name: str = "table") -> StrategyProfile:
    """
    Profile read from an action table.

    Parameters
    ----------
    params : GameParams
    table : mapping
        ``(index, round)`` to action. ``(index, None)`` is the index default and
        ``(0, None)`` the default of every index.
    proposals : mapping, optional
        Whether each index proposes a valid block, valid by default.

    """
    proposals = dict(proposals or {})
    strategies: Dict[int, Callable] = {
        index: partial(_table_strategy, dict(table), proposals, index) for index in params.players
    }
    return StrategyProfile(name=name, n=params.n, strategies=strategies, history_free=True)


CANONICAL_PROFILES = {
    "prescribed": profile_prescribed,
    "prop1": profile_prop1,
    "prop2": profile_prop2,
    "prop4": profile_prop4,
}


def get_profile(name: str, params: GameParams) -> StrategyProfile:
    try:
        factory = CANONICAL_PROFILES[name]
    except KeyError:
        raise ScenarioError(f"unknown profile '{name}', expected one of {sorted(CANONICAL_PROFILES)}")
    return factory(params)
