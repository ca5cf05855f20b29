# -*- coding: utf-8 -*-
"""
Which committee seats are held by Byzantine players.
"""
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import FrozenSet, Iterable, Iterator

import numpy as np

from core_utils.enum import PlayerType
from core_utils.error import RangeViolated

__all__ = [
    "ByzantineAssignment",
    "worst_case_assignment",
    "all_assignments",
    "count_assignments",
    "sample_assignments",
]


@dataclass(frozen=True)
class ByzantineAssignment:
    """
    A set ``S`` of exactly ``f`` Byzantine indexes out of ``1..n``.

    Examples
    --------
    >>> seating = ByzantineAssignment.of(10, [1, 5])
    >>> seating.player_type(5)
    <PlayerType.BYZANTINE: 'byzantine'>

    """
    n: int
    indexes: FrozenSet[int]

    @classmethod
    def of(cls, n: int, indexes: Iterable[int]) -> "ByzantineAssignment":
        values = [int(index) for index in indexes]
        seats = frozenset(values)
        if len(seats) != len(values):
            raise RangeViolated(f"duplicate Byzantine index in {sorted(values)}")
        outside = sorted(index for index in seats if not 1 <= index <= n)
        if outside:
            raise RangeViolated(f"Byzantine indexes {outside} are outside 1..{n}")
        return cls(n=n, indexes=seats)

    @property
    def f(self) -> int:
        return len(self.indexes)

    def __contains__(self, index: int) -> bool:
        return index in self.indexes

    def player_type(self, index: int) -> PlayerType:
        return PlayerType.BYZANTINE if index in self.indexes else PlayerType.RATIONAL

    def highest_byzantine_index(self) -> int:
        """0 when nobody is Byzantine."""
        return max(self.indexes, default=0)

    def rational_indexes(self) -> tuple:
        return tuple(index for index in range(1, self.n + 1) if index not in self.indexes)

    def as_list(self) -> list:
        return sorted(self.indexes)


def worst_case_assignment(n: int, f: int) -> ByzantineAssignment:
    """Byzantine players hold the first ``f`` proposer slots."""
    return ByzantineAssignment.of(n, range(1, f + 1))


def count_assignments(n: int, f: int) -> int:
    return comb(n, f)


def all_assignments(n: int, f: int) -> Iterator[ByzantineAssignment]:
    """Every seating, in lexicographic order of the sorted index tuples."""
    for seats in combinations(range(1, n + 1), f):
        yield ByzantineAssignment(n=n, indexes=frozenset(seats))


def sample_assignments(n: int, f: int, size: int, rng: np.random.Generator) -> Iterator[ByzantineAssignment]:
    """
    Draw ``size`` uniform seatings. Each row takes the ``f`` smallest keys of
    ``n`` uniform draws, which is a uniform ``f``-subset.
    """
    if size <= 0:
        return
    keys = rng.random((size, n))
    chosen = np.argsort(keys, axis=1)[:, :f] + 1
    for row in chosen:
        yield ByzantineAssignment(n=n, indexes=frozenset(int(index) for index in row))
