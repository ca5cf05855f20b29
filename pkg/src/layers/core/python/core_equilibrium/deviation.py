# -*- coding: utf-8 -*-
"""
One-shot deviations and the observation prefix a player conditions on.
"""
from dataclasses import dataclass, field
from typing import FrozenSet, List

from core_game.actions import RoundAction, enumerate_receiver_actions
from core_protocol.engine import Deviation
from core_utils.error import StrategyDomainError

__all__ = ["Conditioning", "Deviation", "enumerate_deviations"]


@dataclass(frozen=True)
class Conditioning:
    """
    The height reached ``round`` without acceptance, and the indexes in
    ``known_byzantine`` are Byzantine.
    """
    round: int = 1
    known_byzantine: FrozenSet[int] = field(default_factory=frozenset)


def enumerate_deviations(player: int, round_: int, prescribed: RoundAction, is_proposer: bool) -> List[Deviation]:
    """
    Alternatives to ``prescribed`` for a one-shot deviation.

    A proposer keeps its checking and sending behaviour and flips the validity
    of the block it proposes. Any other player gets the five behaviours that
    differ from the prescribed one.
    """
    if is_proposer:
        if prescribed.propose_valid is None:
            raise StrategyDomainError(f"proposer {player} has no block in round {round_}")
        return [Deviation(player, round_, prescribed.with_proposal(not prescribed.propose_valid))]
    return [
        Deviation(player, round_, action)
        for action in enumerate_receiver_actions()
        if not action.same_behaviour(prescribed)
    ]
