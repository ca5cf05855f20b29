# -*- coding: utf-8 -*-
"""
Strategy profiles: one behaviour function per committee index.
"""
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Mapping

from core_game.actions import RoundAction
from core_game.info_set import InfoSet
from core_utils.enum import PlayerType
from core_utils.error import StrategyDomainError

__all__ = ["Strategy", "StrategyProfile"]

Strategy = Callable[[InfoSet], RoundAction]


@dataclass(frozen=True, eq=False)
class StrategyProfile:
    """
    Rational behaviour for every index ``1..n``.

    Seats held by Byzantine players ignore their entry: the engine always binds
    them to the fixed Byzantine behaviour.

    ``history_free`` declares that every strategy reads only the index and the
    round of its information set. The engine then evaluates each
    ``(index, round)`` once and skips building histories.
    """
    name: str
    n: int
    strategies: Mapping[int, Strategy]
    history_free: bool = False

    def __post_init__(self):
        missing = [index for index in range(1, self.n + 1) if index not in self.strategies]
        if missing:
            raise StrategyDomainError(f"profile '{self.name}' has no strategy for indexes {missing}")
        object.__setattr__(self, "strategies", MappingProxyType(dict(self.strategies)))
        object.__setattr__(self, "_round_actions", {})

    def action(self, index: int, info: InfoSet) -> RoundAction:
        action = self.strategies[index](info)
        if not isinstance(action, RoundAction):
            raise StrategyDomainError(
                f"profile '{self.name}' returned {action!r} for player {index} in round {info.round}"
            )
        return action

    def round_action(self, index: int, round_: int) -> RoundAction:
        if not self.history_free:
            raise StrategyDomainError(f"profile '{self.name}' reads histories, an information set is needed")
        key = (index, round_)
        action = self._round_actions.get(key)
        if action is None:
            info = InfoSet(player_index=index, own_type=PlayerType.RATIONAL, round=round_)
            action = self._round_actions[key] = self.action(index, info)
        return action

    def __reduce__(self):
        return StrategyProfile, (self.name, self.n, dict(self.strategies), self.history_free)
