# -*- coding: utf-8 -*-
"""
Expected costs along the worst-case path of the validity profile.

Under a uniform seating, once rounds ``1..t-1`` all failed, the proposer of
round ``t`` is Byzantine with probability ``(f - t + 1) / (n - t + 1)``. The
recurrences below count the expected number of checks and sends a player
pays from round ``t`` to the end of the height.
"""
from fractions import Fraction
from functools import lru_cache

from core_game.params import GameParams
from core_utils.error import RangeError

__all__ = [
    "hazard",
    "property_p",
    "phi",
    "psi",
    "pi_check",
    "pi_send",
    "checker_continuation",
]


def hazard(n: int, f: int, t: int) -> Fraction:
    """
    Probability that round ``t`` has a Byzantine proposer given that rounds
    ``1..t-1`` did.

    Examples
    --------
    >>> hazard(10, 3, 1)
    Fraction(3, 10)

    """
    if not 0 <= f < n:
        raise RangeError(f"f must satisfy 0 <= f < n, got f={f}, n={n}")
    if not 1 <= t <= f + 1:
        raise RangeError(f"round {t} is outside 1..{f + 1}")
    return Fraction(f - t + 1, n - t + 1)


@lru_cache(maxsize=4096)
def property_p(n: int, f: int, t: int, boundary_round: int, boundary_value: Fraction = Fraction(1)) -> Fraction:
    """
    Solve ``g(t) = 1 + (f - t + 1) / (n - t + 1) * g(t + 1)`` backwards from
    ``g(boundary_round) = boundary_value``.

    Parameters
    ----------
    n, f : int
    t : int
        Round to evaluate, ``1 <= t <= boundary_round``.
    boundary_round : int
        ``f`` for the checking cost, ``f + 1`` for the sending cost.
    boundary_value : Fraction

    Returns
    -------
    Fraction

    Examples
    --------
    >>> property_p(10, 3, 1, 3)
    Fraction(41, 30)

    """
    if not 0 <= f < n:
        raise RangeError(f"f must satisfy 0 <= f < n, got f={f}, n={n}")
    if not 1 <= t <= boundary_round <= f + 1:
        raise RangeError(f"round {t} with boundary {boundary_round} is outside 1..{f + 1}")
    value = Fraction(boundary_value)
    for s in range(boundary_round - 1, t - 1, -1):
        value = 1 + hazard(n, f, s) * value
    return value


def phi(n: int, f: int, t: int) -> Fraction:
    """Expected number of checks from round ``t``, defined for ``1 <= t <= f``."""
    if not 1 <= t <= f:
        raise RangeError(f"phi is defined for rounds 1..{f}, got {t}")
    return property_p(n, f, t, f)


def psi(n: int, f: int, t: int) -> Fraction:
    """Expected number of sends from round ``t``, defined for ``1 <= t <= f + 1``."""
    if not 1 <= t <= f + 1:
        raise RangeError(f"psi is defined for rounds 1..{f + 1}, got {t}")
    return property_p(n, f, t, f + 1)


def pi_check(params: GameParams, t: int) -> Fraction:
    """
    Continuation payoff of a checking player at round ``t <= f``.

    Examples
    --------
    >>> params = GameParams(n=10, f=3, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> pi_check(params, 2)
    Fraction(59, 9)

    """
    return params.reward - params.cost_send - phi(params.n, params.f, t) * params.cost_check


def pi_send(params: GameParams, t: int) -> Fraction:
    """Continuation payoff of a blind sender at round ``t <= f + 1``."""
    return params.reward - psi(params.n, params.f, t) * params.cost_send


def checker_continuation(params: GameParams, t: int) -> Fraction:
    """``pi_check`` extended to round ``f + 1``, where the block is surely valid."""
    if t == params.f + 1:
        return params.reward - params.cost_send
    return pi_check(params, t)
