from decimal import Decimal
from fractions import Fraction
from unittest import TestCase

from core_utils.enum import Regime
from core_utils.error import ScenarioError
from core_utils.utils import (
    cast_default,
    cast_fraction,
    expand_rationals,
    fraction_to_str,
    get_logger,
    parse_bool,
    parse_int_list,
    parse_value_list,
)

LOGGER = get_logger("test_utils")


class TestCasting(TestCase):
    def test_cast_fraction_accepts_ratio_decimal_and_int(self):
        self.assertEqual(Fraction(5, 2), cast_fraction("5/2"))
        self.assertEqual(Fraction(5, 2), cast_fraction("2.5"))
        self.assertEqual(Fraction(1, 10), cast_fraction(0.1))
        self.assertEqual(Fraction(7), cast_fraction(7))
        self.assertEqual(Fraction(3, 2), cast_fraction(Decimal("1.5")))

    def test_cast_fraction_rejects_garbage(self):
        for value in ("ten", "1/0", None, True):
            with self.assertRaises(ScenarioError):
                cast_fraction(value)

    def test_cast_default(self):
        self.assertEqual("59/9", cast_default(Fraction(59, 9)))
        self.assertEqual("7", cast_default(Fraction(7)))
        self.assertEqual("validity_and_termination", cast_default(Regime.VALIDITY_AND_TERMINATION))
        self.assertEqual([1, 3], cast_default(frozenset({3, 1})))
        with self.assertRaises(TypeError):
            cast_default(object())

    def test_fraction_to_str_is_reduced(self):
        self.assertEqual("1/2", fraction_to_str(Fraction(2, 4)))

    def test_expand_rationals_keeps_order(self):
        record = expand_rationals({"round": 1, "phi": Fraction(41, 30), "psi": None})
        self.assertEqual(["round", "phi", "phi_decimal", "psi"], list(record))
        self.assertAlmostEqual(41 / 30, record["phi_decimal"])


class TestParsing(TestCase):
    def test_ranges_and_lists(self):
        self.assertEqual(["1", "2", "3", "4"], parse_value_list("1..4"))
        self.assertEqual(["12", "14", "5/2"], parse_value_list("12, 14,5/2"))
        self.assertEqual([], parse_value_list("  "))
        self.assertEqual([3, 5], parse_int_list("3,5"))

    def test_bad_range(self):
        with self.assertRaises(ScenarioError):
            parse_value_list("a..b")
        with self.assertRaises(ScenarioError):
            parse_int_list("1,x")

    def test_parse_bool(self):
        self.assertTrue(parse_bool("yes"))
        self.assertFalse(parse_bool("0"))
        self.assertTrue(parse_bool(None, default=True))
        with self.assertRaises(ScenarioError):
            parse_bool("maybe")
