from unittest import TestCase

from core_game.actions import ABSTAIN, CHECK_SEND_IF_INVALID, CHECK_SEND_IF_VALID, SEND_BLIND, parse_action
from core_game.info_set import InfoSet
from core_game.params import GameParams
from core_protocol.profiles import (
    byzantine_action,
    get_profile,
    profile_from_table,
    profile_prop2,
    profile_prop4,
)
from core_utils.enum import PlayerType
from core_utils.error import PreconditionViolated, ScenarioError


def info(index, round_):
    return InfoSet(player_index=index, own_type=PlayerType.RATIONAL, round=round_)


class TestProfiles(TestCase):
    def setUp(self) -> None:
        self.params = GameParams(n=10, f=2, nu=4, reward=10, cost_check=2, cost_send=1, kappa=100)

    def test_byzantine_behaviour(self):
        proposer = byzantine_action(InfoSet(player_index=2, own_type=PlayerType.BYZANTINE, round=2))
        receiver = byzantine_action(InfoSet(player_index=2, own_type=PlayerType.BYZANTINE, round=1))
        self.assertFalse(proposer.propose_valid)
        self.assertTrue(proposer.same_behaviour(CHECK_SEND_IF_INVALID))
        self.assertEqual(CHECK_SEND_IF_INVALID, receiver)

    def test_validity_profile_ranges(self):
        profile = profile_prop4(self.params)
        self.assertEqual(9, self.params.last_checker_index)
        self.assertEqual(CHECK_SEND_IF_VALID, profile.action(9, info(9, 1)))
        self.assertEqual(SEND_BLIND, profile.action(10, info(10, 1)))
        self.assertEqual(CHECK_SEND_IF_VALID, profile.action(5, info(5, 2)))
        self.assertEqual(SEND_BLIND, profile.action(5, info(5, 3)))
        proposer = profile.action(3, info(3, 3))
        self.assertTrue(proposer.propose_valid)
        self.assertTrue(proposer.same_behaviour(CHECK_SEND_IF_VALID))

    def test_coordination_failure_profile(self):
        profile = profile_prop2(self.params)
        self.assertEqual(ABSTAIN, profile.action(4, info(4, 1)))
        self.assertTrue(profile.action(1, info(1, 1)).propose_valid)

    def test_table_profile(self):
        table = {
            (0, None): parse_action("check,send_iff_valid"),
            (3, None): parse_action("nocheck,always"),
            (3, 2): parse_action("nocheck,never"),
        }
        profile = profile_from_table(self.params, table, proposals={1: False})
        self.assertEqual(CHECK_SEND_IF_VALID, profile.action(5, info(5, 1)))
        self.assertEqual(SEND_BLIND, profile.action(3, info(3, 1)))
        self.assertEqual(ABSTAIN, profile.action(3, info(3, 2)))
        self.assertFalse(profile.action(1, info(1, 1)).propose_valid)
        self.assertTrue(profile.action(2, info(2, 2)).propose_valid)

    def test_unknown_profile(self):
        with self.assertRaises(ScenarioError):
            get_profile("prop3", self.params)

    def test_validity_profile_precondition(self):
        for fields in (dict(n=10, f=4, nu=4), dict(n=6, f=2, nu=4)):
            params = GameParams(reward=10, cost_check=2, cost_send=1, kappa=100, **fields)
            with self.assertRaises(PreconditionViolated):
                profile_prop4(params)
