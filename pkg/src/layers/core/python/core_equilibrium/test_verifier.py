from fractions import Fraction
from unittest import TestCase

from core_game.assignment import all_assignments, worst_case_assignment
from core_game.params import GameParams
from core_equilibrium.verifier import verify_equilibrium
from core_payoff.recurrences import pi_check, pi_send
from core_payoff.thresholds import kappa_bound_exact, kappa_threshold, kappa_threshold_terminal, reward_threshold
from core_protocol.engine import run_height
from core_protocol.profiles import profile_prescribed, profile_prop1, profile_prop2, profile_prop4
from core_utils.enum import BeliefModel, EvaluationMode, Verdict
from core_utils.error import RangeViolated
from core_utils.utils import get_logger

LOGGER = get_logger("test_verifier")


def params_for(n, f, nu, kappa=20):
    return GameParams(n=n, f=f, nu=nu, reward=10, cost_check=2, cost_send=1, kappa=kappa)


def prop1_committees(largest):
    """``f >= nu`` and ``n - f >= nu + 1``."""
    for n in range(3, largest + 1):
        for f in range(1, n):
            for nu in range(1, min(f, n - f - 1) + 1):
                yield n, f, nu


def prop2_committees(largest):
    """``1 <= f < nu <= n - f``."""
    for n in range(3, largest + 1):
        for f in range(1, n):
            for nu in range(f + 1, n - f + 1):
                yield n, f, nu


def validity_committees(largest):
    """``1 <= f < nu < n - f``."""
    for n in range(4, largest + 1):
        for f in range(1, n):
            for nu in range(f + 1, n - f):
                yield n, f, nu


def focus(n, f):
    """All indexes up to n = 8. Larger committees keep 1, 2, f + 1, f + 2 and n."""
    return None if n <= 8 else sorted({1, 2, f + 1, f + 2, n} & set(range(1, n + 1)))


class TestVerifyExact(TestCase):
    def test_prop1_round_one(self):
        params = params_for(5, 2, 2)
        report = self.__generic_test(params, profile_prop1(params), Verdict.DOMINATED)
        self.assertEqual({1}, {entry.round for entry in report.entries})
        self.assertEqual(5 * 4, len(report.skipped))
        proposer = [entry for entry in report.entries if entry.player == 1]
        self.assertEqual(1, len(proposer))
        self.assertEqual(Fraction(7), proposer[0].equilibrium_utility)
        self.assertEqual(Fraction(-22), proposer[0].deviation_utility)

    def test_prop2_silence(self):
        params = params_for(5, 1, 2)
        report = self.__generic_test(params, profile_prop2(params), Verdict.DOMINATED)
        self.assertEqual((), report.skipped)
        self.assertEqual(5 + 20 * 5, len(report.entries))
        self.assertTrue(all(entry.equilibrium_utility == 0 for entry in report.entries))

    def test_prop4_validity(self):
        params = params_for(7, 1, 3)
        report = self.__generic_test(params, profile_prop4(params), Verdict.DOMINATED)
        self.assertEqual(5 * 7 + 1, len(report.skipped))
        self.assertIn((1, 2), report.skipped)
        entry = self.__entry(report, 7, 1, "nocheck/never")
        self.assertEqual(Fraction(62, 7), entry.equilibrium_utility)
        self.assertEqual(Fraction(9, 7), entry.deviation_utility)
        self.assertEqual(Fraction(43, 7), self.__entry(report, 4, 1, "nocheck/always").deviation_utility)

    def test_blind_sending_pays_below_the_penalty_bound(self):
        params = params_for(7, 1, 3, kappa=12)
        report = verify_equilibrium(params, profile_prop4(params), players=[4], rounds=[1])
        self.assertEqual(Verdict.PROFITABLE, report.verdict)
        profitable = report.profitable
        self.assertEqual(["nocheck/always"], [entry.deviation for entry in profitable])
        self.assertEqual(Fraction(2, 7), profitable[0].gain)
        self.assertEqual((), report.mismatched_closed_forms)

    def test_blind_sending_around_the_exact_bound(self):
        for kappa, gain, verdict in (
            (Fraction(13), Fraction(1, 45), Verdict.PROFITABLE),
            (Fraction(105, 8), Fraction(0), Verdict.DOMINATED),
            (Fraction(57, 4) - Fraction(1, 100), Fraction(-223, 1125), Verdict.DOMINATED),
        ):
            with self.subTest(kappa=kappa):
                params = params_for(10, 2, 4, kappa=kappa)
                report = verify_equilibrium(params, profile_prop4(params), players=[5], rounds=[1])
                self.assertEqual(verdict, report.verdict)
                self.assertEqual(gain, self.__entry(report, 5, 1, "nocheck/always").gain)
                self.assertEqual((), report.mismatched_closed_forms)

    def test_later_checks_after_a_short_vote(self):
        params = params_for(9, 3, 5)
        report = verify_equilibrium(params, profile_prop4(params), players=[5, 8], rounds=[1, 2])
        self.assertEqual((), report.mismatched_closed_forms)
        self.assertEqual(Fraction(313, 84), self.__entry(report, 5, 1, "nocheck/always").deviation_utility)

    def test_rounds_after_an_unreachable_round_are_skipped(self):
        params = params_for(5, 2, 2)
        expected = tuple((player, round_) for player in range(1, 6) for round_ in range(2, 6))
        for mode in (EvaluationMode.EXACT, EvaluationMode.MC):
            with self.subTest(mode=mode):
                report = verify_equilibrium(params, profile_prop1(params), mode=mode, trials=200, seed=4)
                self.assertEqual(expected, report.skipped)

    def test_prescribed_profile_is_not_an_equilibrium(self):
        params = params_for(7, 1, 3)
        report = verify_equilibrium(params, profile_prescribed(params), players=[5], rounds=[1])
        self.assertEqual(Verdict.PROFITABLE, report.verdict)

    def test_own_type_skips_closed_forms(self):
        params = params_for(5, 2, 2)
        report = verify_equilibrium(params, profile_prop1(params), belief=BeliefModel.OWN_TYPE, players=[3])
        self.assertTrue(all(entry.closed_form is None for entry in report.entries))
        self.assertEqual(Fraction(-1), report.entries[0].equilibrium_utility)

    def test_range_checked(self):
        params = params_for(5, 2, 2)
        with self.assertRaises(RangeViolated):
            verify_equilibrium(params, profile_prop1(params), players=[6])

    def __entry(self, report, player, round_, deviation):
        return next(
            entry for entry in report.entries
            if entry.player == player and entry.round == round_ and entry.deviation == deviation
        )

    def __generic_test(self, params, profile, expected):
        report = verify_equilibrium(params, profile)
        LOGGER.info({"profile": profile.name, "verdict": report.verdict.value, "entries": len(report.entries)})
        self.assertEqual(expected, report.verdict)
        self.assertEqual((), report.mismatched_closed_forms)
        self.assertEqual((), report.profitable)
        return report


class TestVerifyMonteCarlo(TestCase):
    def test_strict_gaps_are_dominated(self):
        params = params_for(5, 1, 2)
        report = verify_equilibrium(params, profile_prop2(params), mode=EvaluationMode.MC,
                                    players=[2], rounds=[1, 2], trials=500, seed=9)
        self.assertEqual(Verdict.DOMINATED, report.verdict)
        self.assertEqual((), report.mismatched_closed_forms)
        self.assertTrue(all(isinstance(entry.deviation_utility, float) for entry in report.entries))

    def test_single_sample_is_inconclusive(self):
        params = params_for(5, 1, 2)
        report = verify_equilibrium(params, profile_prop2(params), mode=EvaluationMode.MC,
                                    rounds=[1], trials=1, seed=9)
        self.assertEqual(Verdict.INCONCLUSIVE, report.verdict)
        self.assertEqual(1, len(report.skipped))
        self.assertTrue(all(entry.stderr is None for entry in report.entries))
        self.assertEqual(len(report.entries), len(report.inconclusive))


class TestCanonicalProfileGrids(TestCase):
    def test_prop1_every_committee(self):
        for n, f, nu in prop1_committees(12):
            with self.subTest(n=n, f=f, nu=nu):
                params = params_for(n, f, nu)
                report = self.__generic_test(params, profile_prop1(params), players=focus(n, f))
                for entry in report.entries:
                    self.assertEqual(1, entry.round)
                    expected = Fraction(7) if entry.player == 1 else 9 - Fraction(20 * f, n)
                    self.assertEqual(expected, entry.equilibrium_utility)

    def test_prop2_never_accepts(self):
        for n, f, nu in prop2_committees(12):
            with self.subTest(n=n, f=f, nu=nu):
                params = params_for(n, f, nu)
                profile = profile_prop2(params)
                for seating in all_assignments(n, f):
                    trace, ledger = run_height(params, seating, profile)
                    self.assertFalse(trace.accepted, seating.as_list())
                    self.assertEqual(n, trace.termination_round)
                    self.assertEqual({0}, {ledger.net(index) for index in seating.rational_indexes()})

    def test_prop2_deviations_never_pay(self):
        for n, f, nu in prop2_committees(12):
            with self.subTest(n=n, f=f, nu=nu):
                params = params_for(n, f, nu)
                rounds = None if n <= 8 else sorted({1, f + 1, n})
                report = self.__generic_test(params, profile_prop2(params), players=focus(n, f), rounds=rounds)
                self.assertEqual({Fraction(0)}, {entry.equilibrium_utility for entry in report.entries})
                self.assertTrue(all(entry.deviation_utility <= 0 for entry in report.entries))
                blind = [entry.deviation_utility for entry in report.entries
                         if entry.deviation == "nocheck/always" and entry.player != entry.round]
                pivot = Fraction(f, n) * (10 - 20) if f == nu - 1 else 0
                self.assertEqual({pivot - 1}, set(blind))

    def test_prop4_every_committee(self):
        for n, f, nu in validity_committees(10):
            with self.subTest(n=n, f=f, nu=nu):
                params = params_for(n, f, nu, kappa=100)
                self.assertGreater(params.kappa, max(kappa_threshold_terminal(params), kappa_threshold(params) or 0))
                self.assertGreaterEqual(params.reward, reward_threshold(params))
                report = self.__generic_test(params, profile_prop4(params))
                continuations = [entry for entry in report.entries if entry.player >= f + 2 and entry.round <= f]
                self.assertTrue(continuations)
                for entry in continuations:
                    checker = entry.player <= params.last_checker_index
                    expected = pi_check(params, entry.round) if checker else pi_send(params, entry.round)
                    self.assertEqual(expected, entry.equilibrium_utility)

    def test_prop4_worst_case_traces(self):
        for n, f, nu in validity_committees(12):
            with self.subTest(n=n, f=f, nu=nu):
                params = params_for(n, f, nu, kappa=100)
                trace, _ = run_height(params, worst_case_assignment(n, f), profile_prop4(params))
                self.assertEqual(f + 1, trace.termination_round)
                self.assertTrue(trace.accepted_block_valid)
                self.assertEqual([nu - 1] * f, [record.message_count for record in trace.rounds[:-1]])

    def test_prop4_penalty_around_the_exact_bound(self):
        checked = 0
        for n, f, nu in validity_committees(10):
            for t in range(1, f + 1):
                bound = kappa_bound_exact(params_for(n, f, nu, kappa=100), t)
                if bound - Fraction(1, 100) <= 10:
                    continue
                checked += 1
                with self.subTest(n=n, f=f, nu=nu, t=t):
                    below = self.__blind_sending(params_for(n, f, nu, kappa=bound - Fraction(1, 100)), f + 2, t)
                    self.assertEqual(Verdict.PROFITABLE, below.verdict)
                    self.assertGreater(below.gain, 0)
                    at = self.__blind_sending(params_for(n, f, nu, kappa=bound), f + 2, t)
                    self.assertEqual(Verdict.DOMINATED, at.verdict)
                    self.assertEqual(0, at.gain)
        self.assertGreater(checked, 10)

    def __blind_sending(self, params, player, round_):
        report = verify_equilibrium(params, profile_prop4(params), players=[player], rounds=[round_])
        self.assertEqual((), report.mismatched_closed_forms)
        return next(entry for entry in report.entries if entry.deviation == "nocheck/always")

    def __generic_test(self, params, profile, players=None, rounds=None):
        report = verify_equilibrium(params, profile, players=players, rounds=rounds)
        LOGGER.debug({"profile": profile.name, "n": params.n, "f": params.f, "nu": params.nu,
                      "entries": len(report.entries)})
        self.assertEqual(Verdict.DOMINATED, report.verdict)
        self.assertEqual((), report.mismatched_closed_forms)
        self.assertTrue(report.entries)
        return report
