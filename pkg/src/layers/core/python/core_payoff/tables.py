# -*- coding: utf-8 -*-
"""
Per-round table of every analytic quantity for one parameter point.
"""
from typing import List

from core_game.params import GameParams
from core_payoff.probability import prob_ib_below, prob_pivot_given_byzantine_proposer
from core_payoff.recurrences import hazard, phi, pi_check, pi_send, psi
from core_payoff.thresholds import alpha, beta, kappa_bound_exact, validity_conditions_hold
from core_utils.error import AnalyticDivisionByZero

__all__ = ["analytics_table"]


def analytics_table(params: GameParams) -> List[dict]:
    """
    One row per round ``1..f+1``. Quantities outside their domain are ``None``.
    ``kappa_bound`` and ``kappa_bound_exact`` sit side by side; the second one
    only exists where the validity conditions hold.
    """
    n, f, nu = params.n, params.f, params.nu
    exact_bounds = validity_conditions_hold(params)
    rows = []
    for t in range(1, f + 2):
        row = {
            "round": t,
            "hazard": hazard(n, f, t),
            "phi": phi(n, f, t) if t <= f else None,
            "psi": psi(n, f, t),
            "pi_check": pi_check(params, t) if t <= f else None,
            "pi_send": pi_send(params, t),
            "prob_ib_below": prob_ib_below(n, f, nu, t) if t <= f else None,
            "prob_pivot": prob_pivot_given_byzantine_proposer(n, f, nu, t) if t <= f else None,
            "alpha": None,
            "beta": None,
            "kappa_bound": None,
            "kappa_bound_exact": None,
        }
        if t <= f and exact_bounds:
            row["kappa_bound_exact"] = kappa_bound_exact(params, t)
        if t < f:
            try:
                row["alpha"] = alpha(params, t)
                row["beta"] = beta(params, t)
                row["kappa_bound"] = row["alpha"] * params.cost_check - row["beta"] * params.cost_send
            except AnalyticDivisionByZero:
                pass
        rows.append(row)
    return rows
