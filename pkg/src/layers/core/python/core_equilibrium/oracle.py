# -*- coding: utf-8 -*-
"""
Exact expected utilities by enumerating every Byzantine seating.
"""
from fractions import Fraction
from typing import Dict, Optional, Tuple

from core_game.assignment import ByzantineAssignment, all_assignments, count_assignments
from core_game.params import GameParams, validate_params
from core_game.strategy import StrategyProfile
from core_equilibrium.deviation import Conditioning, Deviation
from core_protocol.engine import ExecutionTrace, play_height
from core_protocol.ledger import compute_entry
from core_utils.enum import BeliefModel
from core_utils.environment import EXACT_BOUND
from core_utils.error import (
    EnumerationTooLarge,
    InfeasibleConditioning,
    PreconditionViolated,
    RangeViolated,
)
from core_utils.utils import get_logger

__all__ = ["ExactOracle", "expected_utility_exact", "reaches_round"]

LAYER_NAME = 'layer-equilibrium-oracle'
LOGGER = get_logger(LAYER_NAME)


def reaches_round(params: GameParams, seating: ByzantineAssignment, profile: StrategyProfile,
                  player: int, round_: int) -> bool:
    """Whether the undeviated height is still running when ``round_`` starts."""
    if round_ == 1:
        return True
    trace = play_height(params, seating, profile, max_rounds=round_ - 1, focal_player=player)
    return not trace.accepted


class ExactOracle:
    """
    Enumerates the ``C(n, f)`` seatings of one parameter point.

    Under ``BeliefModel.PRIOR`` every seating keeps its prior weight and a
    player whose index is a Byzantine seat is superimposed as an extra voter.
    Under ``BeliefModel.OWN_TYPE`` seatings containing the player are dropped.
    Either way the seatings left are the ones whose undeviated run reaches the
    conditioning round and that contain the known Byzantine indexes.

    The undeviated height of every ``(seating, player)`` pair is played once.
    Reachability is read off its termination round and deviated heights copy
    the rounds before the deviation from it.
    """

    def __init__(self, params: GameParams, profile: StrategyProfile,
                 belief: BeliefModel = BeliefModel.PRIOR, bound: Optional[int] = None):
        validate_params(params, allow_no_byzantine=True)
        bound = EXACT_BOUND if bound is None else bound
        if params.n > bound:
            raise EnumerationTooLarge(
                f"n={params.n} needs {count_assignments(params.n, params.f)} seatings, "
                f"exact evaluation is limited to n <= {bound}; use Monte Carlo"
            )
        self.params = params
        self.profile = profile
        self.belief = belief
        self._seatings = tuple(all_assignments(params.n, params.f))
        self._baselines: Dict[Tuple[ByzantineAssignment, int], ExecutionTrace] = {}
        self._consistent: Dict[Tuple[int, Conditioning], Tuple[ByzantineAssignment, ...]] = {}

    def _check_request(self, player: int, conditioning: Conditioning) -> None:
        if not 1 <= player <= self.params.n:
            raise RangeViolated(f"player {player} is outside 1..{self.params.n}")
        if not 1 <= conditioning.round <= self.params.n:
            raise RangeViolated(f"round {conditioning.round} is outside 1..{self.params.n}")

    def baseline(self, seating: ByzantineAssignment, player: int) -> ExecutionTrace:
        """Undeviated height of ``seating`` seen by ``player``."""
        key = (seating, player)
        trace = self._baselines.get(key)
        if trace is None:
            trace = self._baselines[key] = play_height(self.params, seating, self.profile, focal_player=player)
        return trace

    def reaches(self, seating: ByzantineAssignment, player: int, round_: int) -> bool:
        return self.baseline(seating, player).termination_round >= round_

    def consistent_seatings(self, player: int, conditioning: Conditioning) -> Tuple[ByzantineAssignment, ...]:
        self._check_request(player, conditioning)
        key = (player, conditioning)
        if key not in self._consistent:
            self._consistent[key] = tuple(
                seating for seating in self._seatings
                if conditioning.known_byzantine <= seating.indexes
                and not (self.belief is BeliefModel.OWN_TYPE and player in seating)
                and self.reaches(seating, player, conditioning.round)
            )
        return self._consistent[key]

    def reachable(self, player: int, conditioning: Conditioning) -> bool:
        """Some consistent seating reaches the conditioning round."""
        return bool(self.consistent_seatings(player, conditioning))

    def on_path(self, player: int, conditioning: Conditioning) -> bool:
        """Some consistent seating has ``player`` rational."""
        return any(player not in seating for seating in self.consistent_seatings(player, conditioning))

    def seating_utility(self, seating: ByzantineAssignment, player: int, from_round: int,
                        deviation: Optional[Deviation] = None) -> Fraction:
        baseline = self.baseline(seating, player)
        trace = baseline
        if deviation is not None:
            trace = play_height(self.params, seating, self.profile, deviation=deviation,
                                focal_player=player, baseline=baseline)
        return compute_entry(trace, player, from_round).net

    def expected_utility(self, player: int, conditioning: Optional[Conditioning] = None,
                         deviation: Optional[Deviation] = None) -> Fraction:
        conditioning = conditioning or Conditioning()
        if deviation is not None and deviation.player != player:
            raise PreconditionViolated(f"deviation of player {deviation.player} evaluated for player {player}")
        seatings = self.consistent_seatings(player, conditioning)
        if not seatings:
            raise InfeasibleConditioning(
                f"no seating reaches round {conditioning.round} with Byzantine "
                f"{sorted(conditioning.known_byzantine)} under profile '{self.profile.name}'"
            )
        total = sum(
            (self.seating_utility(seating, player, conditioning.round, deviation) for seating in seatings),
            Fraction(0),
        )
        return total / len(seatings)


def expected_utility_exact(params: GameParams, profile: StrategyProfile, player: int,
                           conditioning: Optional[Conditioning] = None,
                           deviation: Optional[Deviation] = None,
                           belief: BeliefModel = BeliefModel.PRIOR,
                           bound: Optional[int] = None) -> Fraction:
    """
    Expected continuation utility of ``player`` from the conditioning round on.

    Examples
    --------
    >>> from core_protocol.profiles import profile_prop1
    >>> params = GameParams(n=10, f=4, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> expected_utility_exact(params, profile_prop1(params), 5)
    Fraction(1, 1)

    """
    return ExactOracle(params, profile, belief, bound).expected_utility(player, conditioning, deviation)
