# -*- coding: utf-8 -*-
"""
One-shot deviation check of a strategy profile at every on-path round.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from core_game.info_set import InfoSet
from core_game.params import GameParams
from core_game.strategy import StrategyProfile
from core_equilibrium.closed_forms import ClosedForm, closed_form
from core_equilibrium.deviation import Conditioning, enumerate_deviations
from core_equilibrium.montecarlo import MonteCarloOracle, summarize
from core_equilibrium.oracle import ExactOracle
from core_utils.enum import BeliefModel, EvaluationMode, PlayerType, Verdict
from core_utils.error import RangeViolated
from core_utils.utils import get_logger

__all__ = [
    "SIGNIFICANCE",
    "DominanceReport",
    "VerificationReport",
    "verify_equilibrium",
]

LAYER_NAME = 'layer-equilibrium-verifier'
LOGGER = get_logger(LAYER_NAME)

# Standard errors a sampled gap must clear to count.
SIGNIFICANCE = 3

Utility = Union[Fraction, float]


@dataclass(frozen=True)
class DominanceReport:
    """Comparison of one deviation against the prescribed action."""
    player: int
    round: int
    prescribed: str
    deviation: str
    equilibrium_utility: Utility
    deviation_utility: Utility
    verdict: Verdict
    stderr: Optional[float] = None
    closed_form: Optional[ClosedForm] = None
    equilibrium_closed_form: Optional[ClosedForm] = None

    @property
    def dominated(self) -> bool:
        return self.verdict is Verdict.DOMINATED

    @property
    def gain(self) -> Utility:
        return self.deviation_utility - self.equilibrium_utility

    def as_record(self) -> dict:
        record = {
            "player": self.player,
            "round": self.round,
            "prescribed": self.prescribed,
            "deviation": self.deviation,
            "equilibrium_utility": self.equilibrium_utility,
            "deviation_utility": self.deviation_utility,
            "gain": self.gain,
            "stderr": self.stderr,
            "verdict": self.verdict.value,
            "closed_form": None,
            "closed_form_value": None,
            "closed_form_difference": None,
            "equilibrium_closed_form_difference": None,
        }
        if self.closed_form is not None:
            record["closed_form"] = self.closed_form.name
            record["closed_form_value"] = self.closed_form.value
            record["closed_form_difference"] = self.deviation_utility - _as_utility(
                self.closed_form.value, self.deviation_utility
            )
        if self.equilibrium_closed_form is not None:
            record["equilibrium_closed_form_difference"] = self.equilibrium_utility - _as_utility(
                self.equilibrium_closed_form.value, self.equilibrium_utility
            )
        return record


def _as_utility(value: Fraction, like: Utility) -> Utility:
    return value if isinstance(like, Fraction) else float(value)


@dataclass(frozen=True)
class VerificationReport:
    profile: str
    mode: EvaluationMode
    belief: BeliefModel
    entries: Tuple[DominanceReport, ...]
    skipped: Tuple[Tuple[int, int], ...] = ()

    @property
    def profitable(self) -> Tuple[DominanceReport, ...]:
        return tuple(entry for entry in self.entries if entry.verdict is Verdict.PROFITABLE)

    @property
    def inconclusive(self) -> Tuple[DominanceReport, ...]:
        return tuple(entry for entry in self.entries if entry.verdict is Verdict.INCONCLUSIVE)

    @property
    def verdict(self) -> Verdict:
        if self.profitable:
            return Verdict.PROFITABLE
        if self.inconclusive:
            return Verdict.INCONCLUSIVE
        return Verdict.DOMINATED

    @property
    def mismatched_closed_forms(self) -> Tuple[DominanceReport, ...]:
        """Entries whose oracle value differs from the closed form (exact mode only)."""
        if self.mode is not EvaluationMode.EXACT:
            return ()
        return tuple(
            entry for entry in self.entries
            if (entry.closed_form is not None and entry.closed_form.value != entry.deviation_utility)
            or (entry.equilibrium_closed_form is not None
                and entry.equilibrium_closed_form.value != entry.equilibrium_utility)
        )


def _prescribed_action(profile: StrategyProfile, player: int, round_: int):
    return profile.action(player, InfoSet(player_index=player, own_type=PlayerType.RATIONAL, round=round_))


def _exact_verdict(equilibrium: Fraction, deviation: Fraction) -> Verdict:
    return Verdict.DOMINATED if equilibrium >= deviation else Verdict.PROFITABLE


def _sampled_verdict(gap: float, stderr: float) -> Verdict:
    if gap >= SIGNIFICANCE * stderr:
        return Verdict.DOMINATED
    if -gap >= SIGNIFICANCE * stderr:
        return Verdict.PROFITABLE
    return Verdict.INCONCLUSIVE


def verify_equilibrium(params: GameParams, profile: StrategyProfile,
                       mode: EvaluationMode = EvaluationMode.EXACT,
                       belief: BeliefModel = BeliefModel.PRIOR,
                       players: Optional[Iterable[int]] = None,
                       rounds: Optional[Iterable[int]] = None,
                       trials: Optional[int] = None, seed: Optional[int] = None,
                       bound: Optional[int] = None) -> VerificationReport:
    """
    Compare the prescribed action with every one-shot deviation for each
    player and each round the player can observe with positive probability.

    Parameters
    ----------
    params : GameParams
    profile : StrategyProfile
    mode : EvaluationMode
        ``EXACT`` enumerates seatings, ``MC`` samples them.
    belief : BeliefModel
    players, rounds : iterable of int, optional
        Restrict the pairs checked, all of ``1..n`` by default.
    trials, seed : int, optional
        Monte Carlo sample size and seed.
    bound : int, optional
        Largest ``n`` the exact mode enumerates.

    Returns
    -------
    VerificationReport
        In exact mode a deviation is dominated when its utility does not exceed
        the equilibrium utility. In Monte Carlo mode the paired gap must clear
        three standard errors either way, otherwise it is inconclusive.

    """
    n = params.n
    players = sorted(set(players)) if players is not None else list(params.players)
    rounds = sorted(set(rounds)) if rounds is not None else list(params.players)
    outside = [value for value in players + rounds if not 1 <= value <= n]
    if outside:
        raise RangeViolated(f"players and rounds must lie in 1..{n}, got {outside}")
    if mode is EvaluationMode.EXACT:
        oracle = ExactOracle(params, profile, belief, bound)
    else:
        oracle = MonteCarloOracle(params, profile, trials, seed, belief)
    with_closed_forms = belief is BeliefModel.PRIOR

    entries: List[DominanceReport] = []
    skipped = []
    for player in players:
        for position, round_ in enumerate(rounds):
            conditioning = Conditioning(round=round_)
            if not oracle.reachable(player, conditioning):
                skipped.extend((player, later) for later in rounds[position:])
                break
            if not oracle.on_path(player, conditioning):
                skipped.append((player, round_))
                continue
            prescribed = _prescribed_action(profile, player, round_)
            is_proposer = player == round_
            equilibrium_form = closed_form(profile.name, params, player, round_) if with_closed_forms else None
            if mode is EvaluationMode.EXACT:
                equilibrium = oracle.expected_utility(player, conditioning)
            else:
                equilibrium_samples = oracle.sample_utilities(player, conditioning)
                equilibrium = summarize(equilibrium_samples, oracle.trials).estimate
            for deviation in enumerate_deviations(player, round_, prescribed, is_proposer):
                form = None
                if with_closed_forms:
                    form = closed_form(profile.name, params, player, round_, deviation.action, is_proposer)
                if mode is EvaluationMode.EXACT:
                    value = oracle.expected_utility(player, conditioning, deviation)
                    verdict, stderr = _exact_verdict(equilibrium, value), None
                else:
                    deviation_samples = oracle.sample_utilities(player, conditioning, deviation)
                    value = summarize(deviation_samples, oracle.trials).estimate
                    gaps = summarize(equilibrium_samples - deviation_samples, oracle.trials)
                    verdict = _sampled_verdict(gaps.estimate, gaps.stderr)
                    stderr = None if math.isinf(gaps.stderr) else gaps.stderr
                entries.append(DominanceReport(
                    player=player,
                    round=round_,
                    prescribed=prescribed.label,
                    deviation=deviation.label,
                    equilibrium_utility=equilibrium,
                    deviation_utility=value,
                    verdict=verdict,
                    stderr=stderr,
                    closed_form=form,
                    equilibrium_closed_form=equilibrium_form,
                ))
                if verdict is Verdict.PROFITABLE:
                    LOGGER.info({"profitable_deviation": entries[-1].as_record()})

    report = VerificationReport(
        profile=profile.name,
        mode=mode,
        belief=belief,
        entries=tuple(entries),
        skipped=tuple(skipped),
    )
    LOGGER.info({
        "profile": profile.name,
        "mode": mode.value,
        "checked": len(entries),
        "off_path": len(skipped),
        "verdict": report.verdict.value,
    })
    return report
