# -*- coding: utf-8 -*-
"""
Sampled expected utilities for committees too large to enumerate.
"""
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from core_game.assignment import ByzantineAssignment, sample_assignments
from core_game.params import GameParams, validate_params
from core_game.strategy import StrategyProfile
from core_equilibrium.deviation import Conditioning, Deviation
from core_protocol.engine import ExecutionTrace, play_height
from core_protocol.ledger import compute_entry
from core_utils.enum import BeliefModel
from core_utils.environment import DEFAULT_SEED, DEFAULT_TRIALS
from core_utils.error import InfeasibleConditioning, PreconditionViolated, RangeViolated
from core_utils.utils import get_logger

__all__ = [
    "BLOCK_SIZE",
    "MonteCarloEstimate",
    "MonteCarloOracle",
    "sample_seatings",
    "summarize",
    "expected_utility_mc",
]

LAYER_NAME = 'layer-equilibrium-montecarlo'
LOGGER = get_logger(LAYER_NAME)

BLOCK_SIZE = 1024


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    samples: int
    trials: int


def sample_seatings(n: int, f: int, trials: int, seed: int) -> Iterator[ByzantineAssignment]:
    """
    ``trials`` uniform seatings. Block ``b`` of ``BLOCK_SIZE`` draws uses its
    own generator seeded with ``(seed, b)``, so a draw only depends on the seed
    and its position.
    """
    if trials < 1:
        raise RangeViolated(f"trials must be positive, got {trials}")
    for block, start in enumerate(range(0, trials, BLOCK_SIZE)):
        rng = np.random.default_rng([seed, block])
        yield from sample_assignments(n, f, min(BLOCK_SIZE, trials - start), rng)


def summarize(samples: np.ndarray, trials: int) -> MonteCarloEstimate:
    count = int(samples.size)
    if count == 0:
        raise InfeasibleConditioning(f"none of the {trials} sampled seatings is consistent with the conditioning")
    stderr = float(np.std(samples, ddof=1) / math.sqrt(count)) if count > 1 else math.inf
    return MonteCarloEstimate(estimate=float(np.mean(samples)), stderr=stderr, samples=count, trials=trials)


class MonteCarloOracle:
    """
    Rejection sampler over seatings with the same belief models as the exact
    oracle.

    The sample is drawn once and repeated seatings are grouped, so each
    distinct seating is played once per request and weighted by its count.
    Undeviated heights are kept for the player being examined only, which
    bounds memory by the number of distinct draws.
    """

    def __init__(self, params: GameParams, profile: StrategyProfile, trials: Optional[int] = None,
                 seed: Optional[int] = None, belief: BeliefModel = BeliefModel.PRIOR):
        validate_params(params, allow_no_byzantine=True)
        self.params = params
        self.profile = profile
        self.trials = DEFAULT_TRIALS if trials is None else trials
        self.seed = DEFAULT_SEED if seed is None else seed
        self.belief = belief
        self._draws: Optional[Dict[ByzantineAssignment, int]] = None
        self._baseline_player: Optional[int] = None
        self._baselines: Dict[ByzantineAssignment, ExecutionTrace] = {}

    @property
    def draws(self) -> Dict[ByzantineAssignment, int]:
        """Distinct sampled seatings and their counts, in order of first draw."""
        if self._draws is None:
            self._draws = dict(Counter(sample_seatings(self.params.n, self.params.f, self.trials, self.seed)))
        return self._draws

    def baseline(self, seating: ByzantineAssignment, player: int) -> ExecutionTrace:
        if player != self._baseline_player:
            self._baselines = {}
            self._baseline_player = player
        trace = self._baselines.get(seating)
        if trace is None:
            trace = self._baselines[seating] = play_height(self.params, seating, self.profile, focal_player=player)
        return trace

    def _consistent(self, seating: ByzantineAssignment, player: int, conditioning: Conditioning) -> bool:
        if not conditioning.known_byzantine <= seating.indexes:
            return False
        if self.belief is BeliefModel.OWN_TYPE and player in seating:
            return False
        return self.baseline(seating, player).termination_round >= conditioning.round

    def _utility(self, seating: ByzantineAssignment, player: int, from_round: int,
                 deviation: Optional[Deviation]) -> Fraction:
        trace = self.baseline(seating, player)
        if deviation is not None:
            trace = play_height(self.params, seating, self.profile, deviation=deviation,
                                focal_player=player, baseline=trace)
        return compute_entry(trace, player, from_round).net

    def consistent_groups(self, player: int, conditioning: Conditioning) -> List[Tuple[ByzantineAssignment, int]]:
        if not 1 <= player <= self.params.n:
            raise RangeViolated(f"player {player} is outside 1..{self.params.n}")
        return [
            (seating, count) for seating, count in self.draws.items()
            if self._consistent(seating, player, conditioning)
        ]

    def consistent_sample(self, player: int, conditioning: Conditioning) -> Iterator[ByzantineAssignment]:
        for seating, count in self.consistent_groups(player, conditioning):
            for _ in range(count):
                yield seating

    def reachable(self, player: int, conditioning: Conditioning) -> bool:
        return bool(self.consistent_groups(player, conditioning))

    def on_path(self, player: int, conditioning: Conditioning) -> bool:
        return any(player not in seating for seating, _ in self.consistent_groups(player, conditioning))

    def sample_utilities(self, player: int, conditioning: Optional[Conditioning] = None,
                         deviation: Optional[Deviation] = None) -> np.ndarray:
        """
        One utility per consistent draw. Draws are grouped by seating in order
        of first appearance, so two calls for the same player and conditioning
        line up draw by draw.
        """
        conditioning = conditioning or Conditioning()
        if deviation is not None and deviation.player != player:
            raise PreconditionViolated(f"deviation of player {deviation.player} evaluated for player {player}")
        groups = self.consistent_groups(player, conditioning)
        values = np.fromiter(
            (float(self._utility(seating, player, conditioning.round, deviation)) for seating, _ in groups),
            dtype=float,
            count=len(groups),
        )
        counts = np.fromiter((count for _, count in groups), dtype=np.int64, count=len(groups))
        return np.repeat(values, counts)

    def expected_utility(self, player: int, conditioning: Optional[Conditioning] = None,
                         deviation: Optional[Deviation] = None) -> MonteCarloEstimate:
        estimate = summarize(self.sample_utilities(player, conditioning, deviation), self.trials)
        LOGGER.debug({"player": player, "estimate": estimate.estimate, "stderr": estimate.stderr,
                      "samples": estimate.samples})
        return estimate


def expected_utility_mc(params: GameParams, profile: StrategyProfile, player: int,
                        deviation: Optional[Deviation] = None, trials: Optional[int] = None,
                        seed: Optional[int] = None, conditioning: Optional[Conditioning] = None,
                        belief: BeliefModel = BeliefModel.PRIOR) -> MonteCarloEstimate:
    """
    Sample mean and standard error of the continuation utility of ``player``.
    The same ``seed`` and ``trials`` always give the same estimate.
    """
    oracle = MonteCarloOracle(params, profile, trials, seed, belief)
    return oracle.expected_utility(player, conditioning, deviation)
