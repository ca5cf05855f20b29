from fractions import Fraction
from unittest import TestCase

from core_game.params import GameParams, validate_params
from core_utils.error import OrderingViolated, RangeViolated
from core_utils.utils import get_logger

LOGGER = get_logger("test_params")


class TestGameParams(TestCase):
    def setUp(self) -> None:
        self.fields = dict(n=10, f=3, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)

    def test_valid_parameters(self):
        params = GameParams(**self.fields)
        self.assertEqual(Fraction(10), params.reward)
        self.assertIsInstance(params.kappa, Fraction)
        self.assertEqual(10, params.last_checker_index)
        validate_params(params)

    def test_rational_literals(self):
        params = GameParams(**{**self.fields, "cost_send": "1/2", "cost_check": "2.5"})
        self.assertEqual(Fraction(1, 2), params.cost_send)
        self.assertEqual(Fraction(5, 2), params.cost_check)

    def test_ordering_violated(self):
        self.__generic_error({"kappa": 5}, OrderingViolated)
        self.__generic_error({"cost_send": 3}, OrderingViolated)
        self.__generic_error({"cost_send": 0}, OrderingViolated)

    def test_range_violated(self):
        self.__generic_error({"n": 4, "f": 4}, RangeViolated)
        self.__generic_error({"nu": 0}, RangeViolated)
        self.__generic_error({"nu": 11}, RangeViolated)
        self.__generic_error({"n": 1, "f": 0, "nu": 1}, RangeViolated)

    def test_no_byzantine_needs_permission(self):
        params = GameParams(**{**self.fields, "f": 0, "nu": 1})
        with self.assertRaises(RangeViolated):
            validate_params(params)
        validate_params(params, allow_no_byzantine=True)

    def test_unchecked_skips_ordering(self):
        params = GameParams.unchecked(**{**self.fields, "kappa": "5"})
        self.assertEqual(Fraction(5), params.kappa)
        with self.assertRaises(OrderingViolated):
            validate_params(params)

    def test_frozen_and_hashable(self):
        params = GameParams(**self.fields)
        self.assertEqual(hash(params), hash(GameParams(**self.fields)))
        self.assertEqual(Fraction(30), params.replace(kappa=30).kappa)
        with self.assertRaises(Exception):
            params.n = 11

    def __generic_error(self, changes, error):
        with self.assertRaises(error) as context:
            GameParams(**{**self.fields, **changes})
        LOGGER.info(str(context.exception))
