from fractions import Fraction
from unittest import TestCase

from core_game.params import GameParams
from core_payoff.regime import classify_regime
from core_utils.enum import Regime
from core_utils.error import RangeViolated
from core_utils.utils import get_logger

LOGGER = get_logger("test_regime")


class TestClassifyRegime(TestCase):
    def setUp(self) -> None:
        self.fields = dict(reward=10, cost_check=2, cost_send=1, kappa=20)

    def test_invalid_acceptance(self):
        self.__generic_test(dict(n=10, f=4, nu=4), [Regime.INVALID_ACCEPTANCE])

    def test_coordination_failure_and_validity(self):
        classification = self.__generic_test(
            dict(n=10, f=2, nu=4),
            [Regime.COORDINATION_FAILURE, Regime.VALIDITY_AND_TERMINATION],
        )
        self.assertEqual(Fraction(13, 2), classification.condition("reward_above_threshold").margin)
        self.assertEqual(Fraction(23, 4), classification.condition("kappa_above_threshold").margin)
        self.assertEqual(Regime.COORDINATION_FAILURE, classification.regime)

    def test_penalty_below_threshold(self):
        classification = self.__generic_test(dict(n=10, f=2, nu=4, kappa=14), [Regime.COORDINATION_FAILURE])
        self.assertEqual(Fraction(-1, 4), classification.condition("kappa_above_threshold").margin)
        self.assertEqual(Fraction(18), classification.kappa_threshold_exact)
        self.assertEqual(Fraction(-4), classification.condition("kappa_above_exact_bound").margin)
        self.assertFalse(classification.condition("kappa_above_terminal_bound").holds)

    def test_terminal_bound_reported_separately(self):
        classification = self.__generic_test(
            dict(n=10, f=2, nu=4, kappa=15),
            [Regime.COORDINATION_FAILURE, Regime.VALIDITY_AND_TERMINATION],
        )
        self.assertEqual(Fraction(161, 8), classification.kappa_threshold_terminal)
        self.assertFalse(classification.condition("kappa_above_terminal_bound").holds)

    def test_exact_bound_between_the_two_closed_form_bounds(self):
        classification = self.__generic_test(
            dict(n=10, f=2, nu=4, kappa=19),
            [Regime.COORDINATION_FAILURE, Regime.VALIDITY_AND_TERMINATION],
        )
        self.assertTrue(classification.condition("kappa_above_exact_bound").holds)
        self.assertFalse(classification.condition("kappa_above_terminal_bound").holds)
        self.assertEqual(Fraction(18), classification.as_record()["kappa_threshold_exact"])

    def test_exact_bound_needs_validity_conditions(self):
        classification = self.__generic_test(dict(n=10, f=4, nu=4), [Regime.INVALID_ACCEPTANCE])
        self.assertIsNone(classification.kappa_threshold_exact)
        self.assertIsNone(classification.condition("kappa_above_exact_bound"))

    def test_no_byzantine(self):
        self.__generic_test(dict(n=10, f=0, nu=1), [Regime.NO_BYZANTINE])

    def test_unclassified(self):
        self.__generic_test(dict(n=10, f=6, nu=5), [Regime.UNCLASSIFIED])

    def test_near_miss_ordering(self):
        params = GameParams.unchecked(n=10, f=2, nu=4, reward=10, cost_check=2, cost_send=1, kappa=5)
        classification = classify_regime(params)
        self.assertIn(Regime.COORDINATION_FAILURE, classification.regimes)
        self.assertNotIn(Regime.VALIDITY_AND_TERMINATION, classification.regimes)

    def test_ranges_still_checked(self):
        with self.assertRaises(RangeViolated):
            classify_regime(GameParams.unchecked(n=4, f=4, nu=2, reward=10, cost_check=2, cost_send=1, kappa=20))

    def __generic_test(self, fields, expected):
        params = GameParams(**{**self.fields, **fields})
        classification = classify_regime(params)
        LOGGER.info(classification.as_record())
        self.assertEqual(tuple(expected), classification.regimes)
        return classification
