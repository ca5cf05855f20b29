# -*- coding: utf-8 -*-
"""
Round by round execution of one consensus height.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core_game.actions import RoundAction, realize_send
from core_game.assignment import ByzantineAssignment
from core_game.info_set import InfoSet, RoundOutcome, update_info_set
from core_game.params import GameParams, validate_params
from core_game.strategy import StrategyProfile
from core_protocol.ledger import PayoffLedger, compute_ledger
from core_protocol.profiles import byzantine_round_action
from core_utils.enum import PlayerType, Validity
from core_utils.error import PreconditionViolated, RangeViolated, StrategyDomainError
from core_utils.utils import get_logger

__all__ = [
    "Deviation",
    "RealizedAction",
    "RoundRecord",
    "ExecutionTrace",
    "play_height",
    "run_height",
]

LAYER_NAME = 'layer-protocol-engine'
LOGGER = get_logger(LAYER_NAME)


@dataclass(frozen=True)
class Deviation:
    """Player ``player`` plays ``action`` in round ``round`` and follows the profile otherwise."""
    player: int
    round: int
    action: RoundAction

    @property
    def label(self) -> str:
        return self.action.label


@dataclass(frozen=True)
class RealizedAction:
    checked: bool
    sent: bool


@dataclass(frozen=True)
class RoundRecord:
    """
    One round of a height. ``actions[i - 1]`` belongs to the seat with index
    ``i``. ``focal_action`` is only set when an extra rational player was
    superimposed on a Byzantine seat.
    """
    round: int
    proposer_index: int
    proposer_type: PlayerType
    block_valid: bool
    actions: Tuple[RealizedAction, ...]
    message_count: int
    accepted: bool
    focal_action: Optional[RealizedAction] = None

    def action_of(self, index: int) -> RealizedAction:
        return self.actions[index - 1]

    def decided(self, index: int) -> bool:
        return self.accepted and self.action_of(index).sent


@dataclass(frozen=True)
class ExecutionTrace:
    params: GameParams
    assignment: ByzantineAssignment
    profile_name: str
    rounds: Tuple[RoundRecord, ...]
    max_rounds: int
    focal_player: Optional[int] = None
    deviation: Optional[Deviation] = None

    @property
    def accepted(self) -> bool:
        return bool(self.rounds) and self.rounds[-1].accepted

    @property
    def termination_round(self) -> int:
        """The accepting round, or the last simulated round."""
        return self.rounds[-1].round

    @property
    def accepted_block_valid(self) -> Optional[bool]:
        return self.rounds[-1].block_valid if self.accepted else None

    @property
    def focal_is_superimposed(self) -> bool:
        return self.focal_player is not None and self.focal_player in self.assignment

    def realized(self, record: RoundRecord, index: int) -> RealizedAction:
        """The realized action of the rational player ``index``."""
        if index == self.focal_player and self.focal_is_superimposed:
            return record.focal_action
        return record.action_of(index)


_REALIZED = {
    (checked, sent): RealizedAction(checked=checked, sent=sent)
    for checked in (False, True) for sent in (False, True)
}


def _realize(action: RoundAction, block_valid: bool) -> RealizedAction:
    return _REALIZED[(action.check, realize_send(action, block_valid))]


def _history(index: int, records: List[RoundRecord], focal: bool = False) -> InfoSet:
    """Information set of a rational ``index`` after the rejected ``records``."""
    validity = []
    for record in records:
        realized = record.focal_action if focal else record.action_of(index)
        if not realized.checked:
            validity.append(Validity.UNKNOWN)
        else:
            validity.append(Validity.VALID if record.block_valid else Validity.INVALID)
    return InfoSet(
        player_index=index,
        own_type=PlayerType.RATIONAL,
        round=len(records) + 1,
        validity_knowledge=tuple(validity),
        messages_observed=tuple(record.message_count for record in records),
        acceptance_history=(False,) * len(records),
    )


def _rational_action(profile: StrategyProfile, index: int, round_: int, info: Optional[InfoSet],
                     deviation: Optional[Deviation]) -> RoundAction:
    if deviation is not None and deviation.player == index and deviation.round == round_:
        return deviation.action
    if info is None:
        return profile.round_action(index, round_)
    return profile.action(index, info)


def _check_baseline(baseline: ExecutionTrace, assignment: ByzantineAssignment, profile: StrategyProfile,
                    focal_player: Optional[int], replayed: int) -> None:
    if (baseline.deviation is not None or baseline.assignment != assignment
            or baseline.profile_name != profile.name or baseline.focal_player != focal_player):
        raise PreconditionViolated("the baseline trace belongs to another seating, profile or focal player")
    if not baseline.accepted and baseline.max_rounds < replayed:
        raise PreconditionViolated(f"the baseline trace stops at round {baseline.max_rounds}, {replayed} are needed")


def play_height(params: GameParams, assignment: ByzantineAssignment, profile: StrategyProfile,
                max_rounds: Optional[int] = None, deviation: Optional[Deviation] = None,
                focal_player: Optional[int] = None,
                baseline: Optional[ExecutionTrace] = None) -> ExecutionTrace:
    """
    Play one height until a block gathers ``nu`` votes or ``max_rounds`` rounds pass.

    Round ``t`` is proposed by index ``t``. Seats in ``assignment`` play the
    Byzantine behaviour, every other seat follows ``profile`` except where
    ``deviation`` overrides it.

    Parameters
    ----------
    params : GameParams
    assignment : ByzantineAssignment
    profile : StrategyProfile
    max_rounds : int, optional
        Between 1 and n, n by default.
    deviation : Deviation, optional
        One-shot override for a rational player.
    focal_player : int, optional
        Rational player evaluated under the type-agnostic prior. When its index
        is a Byzantine seat the seat keeps behaving Byzantine and the focal
        player acts as one more voter, proposing in its own round.
    baseline : ExecutionTrace, optional
        Undeviated trace of the same seating, profile and focal player. The
        rounds before the deviation are copied from it instead of being played.

    Returns
    -------
    ExecutionTrace

    """
    validate_params(params, allow_no_byzantine=True)
    n = params.n
    if assignment.n != n or assignment.f != params.f:
        raise RangeViolated(
            f"assignment of {assignment.f} out of {assignment.n} seats does not match f={params.f}, n={n}"
        )
    horizon = n if max_rounds is None else max_rounds
    if not 1 <= horizon <= n:
        raise RangeViolated(f"max_rounds must lie in 1..{n}, got {max_rounds}")
    if focal_player is not None and not 1 <= focal_player <= n:
        raise RangeViolated(f"focal player {focal_player} is outside 1..{n}")
    superimposed = focal_player is not None and focal_player in assignment
    if deviation is not None and deviation.player in assignment and not (
            superimposed and deviation.player == focal_player):
        raise PreconditionViolated(f"player {deviation.player} is Byzantine and never deviates")

    records: List[RoundRecord] = []
    if baseline is not None:
        replayed = horizon if deviation is None else min(deviation.round - 1, horizon)
        _check_baseline(baseline, assignment, profile, focal_player, replayed)
        records.extend(baseline.rounds[:replayed])

    rational = assignment.rational_indexes()
    infos: Dict[int, InfoSet] = {}
    focal_info = None
    if not profile.history_free:
        infos = {index: _history(index, records) for index in rational}
        if superimposed:
            focal_info = _history(focal_player, records, focal=True)

    accepted = bool(records) and records[-1].accepted
    reuse_suffix = baseline is not None and deviation is not None and profile.history_free
    round_ = len(records) + 1
    while round_ <= horizon and not accepted:
        chosen = {}
        for index in params.players:
            if index in assignment:
                chosen[index] = byzantine_round_action(index, round_)
            else:
                chosen[index] = _rational_action(profile, index, round_, infos.get(index), deviation)
        focal_choice = None
        if superimposed:
            focal_choice = _rational_action(profile, focal_player, round_, focal_info, deviation)

        proposal = focal_choice if superimposed and round_ == focal_player else chosen[round_]
        if proposal.propose_valid is None:
            raise StrategyDomainError(f"proposer {round_} did not choose a block in round {round_}")
        block_valid = proposal.propose_valid

        realized = tuple(_realize(chosen[index], block_valid) for index in params.players)
        focal_realized = _realize(focal_choice, block_valid) if superimposed else None
        messages = sum(action.sent for action in realized) + int(bool(focal_realized and focal_realized.sent))
        accepted = messages >= params.nu
        records.append(RoundRecord(
            round=round_,
            proposer_index=round_,
            proposer_type=assignment.player_type(round_),
            block_valid=block_valid,
            actions=realized,
            message_count=messages,
            accepted=accepted,
            focal_action=focal_realized,
        ))
        round_ += 1
        if accepted:
            break
        if reuse_suffix and deviation.round == round_ - 1:
            # later rounds of a history-free profile do not see the deviation
            suffix = baseline.rounds[len(records):horizon]
            records.extend(suffix)
            accepted = bool(suffix) and suffix[-1].accepted
            round_ = len(records) + 1
            continue
        if profile.history_free:
            continue
        infos = {
            index: update_info_set(info, RoundOutcome(round_ - 1, messages, False, realized[index - 1].checked,
                                                      block_valid))
            for index, info in infos.items()
        }
        if superimposed:
            focal_info = update_info_set(
                focal_info, RoundOutcome(round_ - 1, messages, False, focal_realized.checked, block_valid)
            )

    return ExecutionTrace(
        params=params,
        assignment=assignment,
        profile_name=profile.name,
        rounds=tuple(records),
        max_rounds=horizon,
        focal_player=focal_player,
        deviation=deviation,
    )


def run_height(params: GameParams, assignment: ByzantineAssignment, profile: StrategyProfile,
               max_rounds: Optional[int] = None, deviation: Optional[Deviation] = None,
               focal_player: Optional[int] = None) -> Tuple[ExecutionTrace, PayoffLedger]:
    """
    Play one height with ``play_height`` and settle the payoffs of every
    rational player.

    Returns
    -------
    tuple
        The trace and the ledger of the whole height.

    Examples
    --------
    >>> from core_game.assignment import worst_case_assignment
    >>> from core_protocol.profiles import profile_prop4
    >>> params = GameParams(n=10, f=2, nu=4, reward=10, cost_check=2, cost_send=1, kappa=100)
    >>> trace, ledger = run_height(params, worst_case_assignment(10, 2), profile_prop4(params))
    >>> trace.termination_round, trace.accepted_block_valid
    (3, True)
    >>> ledger.net(5)
    Fraction(5, 1)

    """
    trace = play_height(params, assignment, profile, max_rounds, deviation, focal_player)
    LOGGER.debug({
        "height": params.height,
        "byzantine": assignment.as_list(),
        "profile": profile.name,
        "termination_round": trace.termination_round,
        "accepted": trace.accepted,
    })
    return trace, compute_ledger(trace)
