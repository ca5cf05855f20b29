from fractions import Fraction
from unittest import TestCase

from core_game.params import GameParams
from core_payoff.tables import analytics_table
from core_payoff.thresholds import (
    alpha,
    beta,
    kappa_bound,
    kappa_bound_exact,
    kappa_threshold,
    kappa_threshold_exact,
    kappa_threshold_terminal,
    reward_threshold,
    validity_conditions_hold,
)
from core_utils.error import PreconditionViolated, RangeError


def params_for(n, f, nu, **changes):
    fields = dict(n=n, f=f, nu=nu, reward=10, cost_check=2, cost_send=1, kappa=100)
    fields.update(changes)
    return GameParams(**fields)


class TestThresholds(TestCase):
    def test_alpha_beta(self):
        params = params_for(10, 2, 4)
        self.assertEqual(Fraction(29, 4), alpha(params, 1))
        self.assertEqual(Fraction(1, 4), beta(params, 1))
        self.assertEqual(Fraction(57, 4), kappa_bound(params, 1))
        self.assertEqual(Fraction(57, 4), kappa_threshold(params))

    def test_small_committee(self):
        params = params_for(6, 2, 4)
        self.assertEqual(Fraction(1, 2), beta(params, 1))
        self.assertEqual(Fraction(11, 2), alpha(params, 1))
        self.assertEqual(Fraction(21, 2), kappa_threshold(params))

    def test_no_upper_seats(self):
        params = params_for(10, 3, 4)
        self.assertEqual(Fraction(0), beta(params, 1))
        self.assertEqual(Fraction(0), beta(params, 2))
        self.assertEqual(Fraction(11), kappa_threshold(params))

    def test_threshold_grows_with_check_cost(self):
        cheap = params_for(10, 3, 6, cost_check=2)
        dear = params_for(10, 3, 6, cost_check=3)
        self.assertGreater(kappa_threshold(dear), kappa_threshold(cheap))

    def test_vacuous_threshold(self):
        self.assertIsNone(kappa_threshold(params_for(10, 1, 4)))

    def test_terminal_bound(self):
        self.assertEqual(Fraction(161, 8), kappa_threshold_terminal(params_for(10, 2, 4)))
        with self.assertRaises(PreconditionViolated):
            kappa_threshold_terminal(params_for(4, 0, 1))

    def test_exact_bound_below_the_closed_form_bound(self):
        params = params_for(10, 2, 4)
        self.assertEqual(Fraction(105, 8), kappa_bound_exact(params, 1))
        self.assertLess(kappa_bound_exact(params, 1), kappa_bound(params, 1))
        self.assertEqual(Fraction(18), kappa_bound_exact(params, 2))
        self.assertEqual(Fraction(18), kappa_threshold_exact(params))

    def test_exact_bound_without_upper_seats(self):
        params = params_for(10, 3, 4)
        self.assertEqual(Fraction(82, 9), kappa_bound_exact(params, 1))
        self.assertEqual(Fraction(11), kappa_bound_exact(params, 2))
        self.assertEqual(kappa_threshold_terminal(params), kappa_threshold_exact(params))

    def test_exact_bound_single_byzantine(self):
        self.assertEqual(Fraction(14), kappa_threshold_exact(params_for(7, 1, 3)))

    def test_exact_bound_domain(self):
        with self.assertRaises(PreconditionViolated):
            kappa_bound_exact(params_for(6, 2, 4), 1)
        with self.assertRaises(RangeError):
            kappa_bound_exact(params_for(10, 2, 4), 3)

    def test_rounds_outside_domain(self):
        params = params_for(10, 2, 4)
        with self.assertRaises(RangeError):
            alpha(params, 2)
        with self.assertRaises(RangeError):
            beta(params, 0)

    def test_reward_threshold(self):
        self.assertEqual(Fraction(27, 7), reward_threshold(params_for(10, 3, 4)))
        self.assertEqual(Fraction(3), reward_threshold(params_for(10, 0, 1)))

    def test_validity_conditions(self):
        self.assertTrue(validity_conditions_hold(params_for(10, 2, 4)))
        self.assertFalse(validity_conditions_hold(params_for(6, 2, 4)))
        self.assertFalse(validity_conditions_hold(params_for(10, 4, 4)))


class TestAnalyticsTable(TestCase):
    def test_rows(self):
        rows = analytics_table(params_for(10, 3, 4, kappa=20))
        self.assertEqual([1, 2, 3, 4], [row["round"] for row in rows])
        self.assertEqual(Fraction(41, 30), rows[0]["phi"])
        self.assertEqual(Fraction(59, 9), rows[1]["pi_check"])
        self.assertIsNone(rows[3]["phi"])
        self.assertEqual(Fraction(9), rows[3]["pi_send"])
        self.assertIsNone(rows[2]["alpha"])
        self.assertEqual(Fraction(11), rows[1]["kappa_bound"])
        self.assertEqual(Fraction(11), rows[1]["kappa_bound_exact"])
        self.assertIsNone(rows[3]["kappa_bound_exact"])
