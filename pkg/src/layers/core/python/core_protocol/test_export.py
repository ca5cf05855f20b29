from unittest import TestCase

from core_game.assignment import worst_case_assignment
from core_game.params import GameParams
from core_protocol.engine import run_height
from core_protocol.export import export_trace
from core_protocol.profiles import profile_prop4
from core_protocol.properties import evaluate_consensus_properties


class TestExportTrace(TestCase):
    def test_records(self):
        params = GameParams(n=6, f=1, nu=3, reward=10, cost_check=2, cost_send=1, kappa=50)
        trace, ledger = run_height(params, worst_case_assignment(6, 1), profile_prop4(params))
        records = export_trace(trace, ledger, evaluate_consensus_properties(trace), run=2)
        kinds = [record["record"] for record in records]
        self.assertEqual(["round", "round", "outcome"] + ["payoff"] * 5, kinds)
        self.assertTrue(all(record["run"] == 2 for record in records))
        first, outcome = records[0], records[2]
        self.assertEqual("byzantine", first["proposer_type"])
        self.assertEqual(params.nu - 1, first["messages"])
        self.assertEqual([1], first["senders"][:1])
        self.assertEqual(2, outcome["termination_round"])
        self.assertTrue(outcome["validity"])
        self.assertEqual([1], outcome["byzantine"])
