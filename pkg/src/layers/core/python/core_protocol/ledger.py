# -*- coding: utf-8 -*-
"""
Payoffs of the rational players for a finished height.
"""
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import TYPE_CHECKING, Mapping

from core_utils.error import RangeViolated

if TYPE_CHECKING:
    from core_protocol.engine import ExecutionTrace

__all__ = ["LedgerEntry", "PayoffLedger", "compute_entry", "compute_ledger"]

ZERO = Fraction(0)


@dataclass(frozen=True)
class LedgerEntry:
    player: int
    reward: Fraction
    check_cost: Fraction
    send_cost: Fraction
    penalty: Fraction

    @property
    def net(self) -> Fraction:
        return self.reward - self.check_cost - self.send_cost - self.penalty

    def as_record(self) -> dict:
        return {
            "player": self.player,
            "reward": self.reward,
            "check_cost": self.check_cost,
            "send_cost": self.send_cost,
            "penalty": self.penalty,
            "net": self.net,
        }


@dataclass(frozen=True)
class PayoffLedger:
    from_round: int
    entries: Mapping[int, LedgerEntry]

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def __getitem__(self, player: int) -> LedgerEntry:
        return self.entries[player]

    def __contains__(self, player: int) -> bool:
        return player in self.entries

    def net(self, player: int) -> Fraction:
        return self.entries[player].net

    def __reduce__(self):
        return PayoffLedger, (self.from_round, dict(self.entries))


def _check_from_round(trace: "ExecutionTrace", from_round: int) -> None:
    if not 1 <= from_round <= trace.termination_round:
        raise RangeViolated(f"from_round {from_round} is outside 1..{trace.termination_round}")


def _entry(trace: "ExecutionTrace", player: int, from_round: int) -> LedgerEntry:
    params = trace.params
    final = trace.rounds[-1]
    actions = [trace.realized(record, player) for record in trace.rounds[from_round - 1:]]
    rewarded = final.accepted and trace.realized(final, player).sent
    return LedgerEntry(
        player=player,
        reward=params.reward if rewarded else ZERO,
        check_cost=params.cost_check * sum(action.checked for action in actions),
        send_cost=params.cost_send * sum(action.sent for action in actions),
        penalty=params.kappa if trace.accepted and not trace.accepted_block_valid else ZERO,
    )


def compute_entry(trace: "ExecutionTrace", player: int, from_round: int = 1) -> LedgerEntry:
    """
    Ledger entry of a single rational player, the focal player included.

    Raises
    ------
    RangeViolated
        ``from_round`` lies after the last round or ``player`` is a Byzantine seat.
    """
    _check_from_round(trace, from_round)
    if player in trace.assignment and player != trace.focal_player:
        raise RangeViolated(f"player {player} holds a Byzantine seat and has no ledger entry")
    return _entry(trace, player, from_round)


def compute_ledger(trace: "ExecutionTrace", from_round: int = 1) -> PayoffLedger:
    """
    Utility of every rational player counted from ``from_round`` on.

    The reward goes to players whose vote is in the accepting round. Every
    rational player bears ``kappa`` when that block is invalid. Check and send
    costs add up over the counted rounds. A focal player superimposed on a
    Byzantine seat gets an entry of its own.

    """
    _check_from_round(trace, from_round)
    players = list(trace.assignment.rational_indexes())
    if trace.focal_is_superimposed:
        players.append(trace.focal_player)
    return PayoffLedger(
        from_round=from_round,
        entries={player: _entry(trace, player, from_round) for player in sorted(players)},
    )
