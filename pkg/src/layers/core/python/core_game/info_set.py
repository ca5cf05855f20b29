# -*- coding: utf-8 -*-
"""
Private history of a player within one height.
"""
from dataclasses import dataclass, field
from typing import Tuple

from core_utils.enum import PlayerType, Validity
from core_utils.error import GameOverError, PreconditionViolated

__all__ = ["InfoSet", "RoundOutcome", "update_info_set"]


@dataclass(frozen=True)
class RoundOutcome:
    """What a player learns when a round closes."""
    round: int
    messages: int
    accepted: bool
    checked: bool
    block_valid: bool


@dataclass(frozen=True)
class InfoSet:
    """
    Everything a player knows at the start of ``round``: its own index and
    type, the validity of the blocks it checked, and the public message
    counts and acceptance outcomes of earlier rounds.
    """
    player_index: int
    own_type: PlayerType
    round: int = 1
    validity_knowledge: Tuple[Validity, ...] = field(default_factory=tuple)
    messages_observed: Tuple[int, ...] = field(default_factory=tuple)
    acceptance_history: Tuple[bool, ...] = field(default_factory=tuple)

    @classmethod
    def initial(cls, player_index: int, own_type: PlayerType) -> "InfoSet":
        return cls(player_index=player_index, own_type=own_type)

    @property
    def is_proposer(self) -> bool:
        return self.round == self.player_index

    @property
    def is_byzantine(self) -> bool:
        return self.own_type is PlayerType.BYZANTINE


def update_info_set(info: InfoSet, outcome: RoundOutcome) -> InfoSet:
    """
    Extend a history with one closed round.

    Raises
    ------
    GameOverError
        The round accepted a block, no next round exists.

    """
    if outcome.accepted:
        raise GameOverError(f"round {outcome.round} accepted a block, the height is over")
    if outcome.round != info.round:
        raise PreconditionViolated(f"outcome of round {outcome.round} given to a history at round {info.round}")
    validity = Validity.UNKNOWN
    if outcome.checked:
        validity = Validity.VALID if outcome.block_valid else Validity.INVALID
    return InfoSet(
        player_index=info.player_index,
        own_type=info.own_type,
        round=info.round + 1,
        validity_knowledge=info.validity_knowledge + (validity,),
        messages_observed=info.messages_observed + (outcome.messages,),
        acceptance_history=info.acceptance_history + (outcome.accepted,),
    )
