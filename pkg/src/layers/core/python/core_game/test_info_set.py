from unittest import TestCase

from core_game.info_set import InfoSet, RoundOutcome, update_info_set
from core_utils.enum import PlayerType, Validity
from core_utils.error import GameOverError, PreconditionViolated


class TestInfoSet(TestCase):
    def setUp(self) -> None:
        self.info = InfoSet.initial(3, PlayerType.RATIONAL)

    def test_initial(self):
        self.assertEqual(1, self.info.round)
        self.assertFalse(self.info.is_proposer)
        self.assertEqual((), self.info.messages_observed)

    def test_update_records_public_and_private_knowledge(self):
        after_one = update_info_set(self.info, RoundOutcome(1, 3, False, checked=True, block_valid=False))
        after_two = update_info_set(after_one, RoundOutcome(2, 3, False, checked=False, block_valid=False))
        self.assertEqual(3, after_two.round)
        self.assertTrue(after_two.is_proposer)
        self.assertEqual((Validity.INVALID, Validity.UNKNOWN), after_two.validity_knowledge)
        self.assertEqual((3, 3), after_two.messages_observed)
        self.assertEqual((False, False), after_two.acceptance_history)
        self.assertEqual(1, self.info.round)

    def test_no_round_after_acceptance(self):
        with self.assertRaises(GameOverError):
            update_info_set(self.info, RoundOutcome(1, 4, True, checked=True, block_valid=True))

    def test_outcome_of_another_round(self):
        with self.assertRaises(PreconditionViolated):
            update_info_set(self.info, RoundOutcome(2, 1, False, checked=False, block_valid=True))
