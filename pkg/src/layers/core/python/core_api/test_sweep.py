from fractions import Fraction
from unittest import TestCase

from core_api.scenario import parse_scenario
from core_api.sweep import evaluate_point, run_sweep
from core_utils.decorators import ignore_warnings

BASE = {
    "SCENARIO_VERSION": "1",
    "N": "7",
    "F": "1",
    "NU": "3",
    "REWARD": "10",
    "COST_CHECK": "2",
    "COST_SEND": "1",
    "KAPPA": "20",
}


class TestSweep(TestCase):
    def test_classify_grid(self):
        scenario = parse_scenario({**BASE, "N": "10", "F": "2", "NU": "4", "GRID_KAPPA": "14,15"})
        rows = run_sweep(scenario)
        self.assertEqual([Fraction(14), Fraction(15)], [row["kappa"] for row in rows])
        self.assertEqual("coordination_failure_exists", rows[0]["regimes"])
        self.assertEqual("coordination_failure_exists,validity_and_termination", rows[1]["regimes"])
        self.assertTrue(all(row["status"] == "ok" for row in rows))

    def test_verify_grid(self):
        scenario = parse_scenario({
            **BASE,
            "ANALYSES": "classify,verify",
            "VERIFY_PLAYERS": "4",
            "VERIFY_ROUNDS": "1",
            "GRID_KAPPA": "12,20",
        })
        rows = run_sweep(scenario)
        self.assertEqual(["profitable", "dominated"], [row["verdict"] for row in rows])
        self.assertEqual(Fraction(2, 7), rows[0]["largest_gain"])

    def test_broken_point_reports_status(self):
        scenario = parse_scenario({**BASE, "ANALYSES": "verify", "VERIFY_PLAYERS": "4", "VERIFY_ROUNDS": "1"})
        row = evaluate_point(scenario, {"kappa": Fraction(5)})
        self.assertTrue(row["status"].startswith("OrderingViolated"))
        self.assertIsNone(row["verdict"])
        self.assertIn("regimes", row)

    @ignore_warnings
    def test_workers_keep_grid_order(self):
        scenario = parse_scenario({**BASE, "WORKERS": "2", "GRID_NU": "2..4"})
        rows = run_sweep(scenario)
        self.assertEqual([2, 3, 4], [row["nu"] for row in rows])

    def test_regime_flips_when_byzantines_lose_the_quorum(self):
        scenario = parse_scenario({**BASE, "N": "10", "F": "3", "GRID_NU": "1..5"})
        regimes = [row["regimes"].split(",")[0] for row in run_sweep(scenario)]
        self.assertEqual(["invalid_acceptance"] * 3 + ["coordination_failure_exists"] * 2, regimes)
