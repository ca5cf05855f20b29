# -*- coding: utf-8 -*-
"""
Hypergeometric probabilities over the seats above the checking range.
"""
from fractions import Fraction
from math import comb

from core_utils.error import RangeError

__all__ = [
    "binomial_ratio",
    "prob_ib_below",
    "prob_pivot_given_byzantine_proposer",
    "expected_checks_unpivotal",
]


def binomial_ratio(top: int, bottom: int, k: int) -> Fraction:
    """
    ``C(top, k) / C(bottom, k)``: probability that a uniform ``k``-subset of
    ``bottom`` seats falls inside a fixed block of ``top`` of them.

    Examples
    --------
    >>> binomial_ratio(9, 10, 2)
    Fraction(4, 5)

    """
    if not 0 <= k <= bottom or top > bottom:
        raise RangeError(f"C({top}, {k}) / C({bottom}, {k}) is undefined")
    return Fraction(comb(max(top, 0), k), comb(bottom, k))


def _checked_round(f: int, t: int) -> None:
    if not 1 <= t <= f:
        raise RangeError(f"round {t} is outside 1..{f}")


def prob_ib_below(n: int, f: int, nu: int, t: int) -> Fraction:
    """
    Probability that every Byzantine index from round ``t`` on is at most
    ``m = n - nu + f + 1``, given that rounds ``1..t-1`` had Byzantine proposers.

    Parameters
    ----------
    n, f, nu : int
    t : int
        Round, ``1 <= t <= f``.

    Returns
    -------
    Fraction
        ``C(m - t + 1, f - t + 1) / C(n - t + 1, f - t + 1)``, and 1 when
        ``m >= n``.

    Examples
    --------
    >>> prob_ib_below(6, 2, 4, 1)
    Fraction(2, 3)
    >>> prob_ib_below(6, 2, 3, 1)
    Fraction(1, 1)

    """
    _checked_round(f, t)
    last_checker = n - nu + f + 1
    if last_checker >= n:
        return Fraction(1)
    remaining = f - t + 1
    return binomial_ratio(last_checker - t + 1, n - t + 1, remaining)


def prob_pivot_given_byzantine_proposer(n: int, f: int, nu: int, t: int) -> Fraction:
    """
    Probability that no Byzantine index exceeds ``m`` given that rounds
    ``1..t`` all had Byzantine proposers. This is the event under which an
    invalid block gathers exactly ``nu - 1`` votes without the player.

    Examples
    --------
    >>> prob_pivot_given_byzantine_proposer(10, 2, 4, 1)
    Fraction(8, 9)

    """
    _checked_round(f, t)
    last_checker = n - nu + f + 1
    if last_checker >= n:
        return Fraction(1)
    return binomial_ratio(last_checker - t, n - t, f - t)


def expected_checks_unpivotal(n: int, f: int, nu: int, t: int) -> Fraction:
    """
    Expected number of checks a checker pays from round ``t + 1`` to round
    ``f``, given that rounds ``1..t`` had Byzantine proposers and at least one
    Byzantine index exceeds ``m``, so that an extra vote on the round ``t``
    block stayed short of the quorum.

    Without the second condition this is ``phi(n, f, t + 1)``. The two agree
    from ``t = f - 1`` on.

    Examples
    --------
    >>> expected_checks_unpivotal(9, 3, 5, 1)
    Fraction(8, 7)
    >>> expected_checks_unpivotal(10, 2, 4, 1)
    Fraction(1, 1)

    """
    _checked_round(f, t)
    above = n - (n - nu + f + 1)
    seats, remaining = n - t, f - t
    if above <= 0 or remaining == 0:
        return Fraction(0)
    unpivotal = comb(seats, remaining) - comb(seats - above, remaining)
    if unpivotal == 0:
        return Fraction(0)
    # rounds t+1..t+j all Byzantine, and one Byzantine among the upper seats
    reached = sum(
        comb(seats - j, remaining - j) - comb(seats - above - j, remaining - j)
        for j in range(remaining)
    )
    return Fraction(reached, unpivotal)
