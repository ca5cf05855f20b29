# -*- coding: utf-8 -*-
"""
Constants of one consensus height: committee size, Byzantine count,
acceptance threshold and the four monetary quantities.
"""
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from core_utils.error import OrderingViolated, RangeViolated
from core_utils.utils import cast_fraction, get_logger

__all__ = ["GameParams", "validate_params", "validate_ranges"]

LAYER_NAME = 'layer-game-params'
LOGGER = get_logger(LAYER_NAME)

MONETARY_FIELDS = ("reward", "cost_check", "cost_send", "kappa")


class GameParams(BaseModel):
    """
    Immutable constants of a single height.

    Construction validates the standing assumptions and raises
    ``RangeViolated`` or ``OrderingViolated``. ``unchecked`` skips the
    ordering so sweeps can classify points that break it.

    Examples
    --------
    >>> from core_game.params import GameParams
    >>> params = GameParams(n=10, f=3, nu=4, reward=10, cost_check=2, cost_send=1, kappa=20)
    >>> params.last_checker_index
    10

    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    f: int
    nu: int
    reward: Fraction
    cost_check: Fraction
    cost_send: Fraction
    kappa: Fraction
    height: str = "k"

    @field_validator(*MONETARY_FIELDS, mode="before")
    @classmethod
    def _to_fraction(cls, value: Any) -> Fraction:
        return cast_fraction(value)

    @model_validator(mode="after")
    def _standing_assumptions(self):
        validate_params(self, allow_no_byzantine=True)
        return self

    @classmethod
    def unchecked(cls, **fields) -> "GameParams":
        """Build parameters without validation, rationals still normalised."""
        values = {"height": "k", **fields}
        for key in MONETARY_FIELDS:
            values[key] = cast_fraction(values[key])
        for key in ("n", "f", "nu"):
            values[key] = int(values[key])
        return cls.model_construct(**values)

    def replace(self, **changes) -> "GameParams":
        values = {**self.model_dump(), **changes}
        return GameParams(**values)

    @property
    def last_checker_index(self) -> int:
        """Highest index that checks in the early rounds of the validity profile."""
        return self.n - self.nu + self.f + 1

    @property
    def players(self) -> range:
        return range(1, self.n + 1)

    def as_record(self) -> dict:
        return {
            "height": self.height,
            "n": self.n,
            "f": self.f,
            "nu": self.nu,
            "reward": self.reward,
            "cost_check": self.cost_check,
            "cost_send": self.cost_send,
            "kappa": self.kappa,
        }


def validate_ranges(params: GameParams, allow_no_byzantine: bool = False) -> None:
    lowest_f = 0 if allow_no_byzantine else 1
    if params.n < 2:
        raise RangeViolated(f"n must be at least 2, got n={params.n}")
    if not lowest_f <= params.f < params.n:
        raise RangeViolated(f"f must satisfy {lowest_f} <= f < n, got f={params.f}, n={params.n}")
    if not 1 <= params.nu <= params.n:
        raise RangeViolated(f"nu must satisfy 1 <= nu <= n, got nu={params.nu}, n={params.n}")


def validate_params(params: GameParams, allow_no_byzantine: bool = False) -> None:
    """
    Check the standing assumptions of the game.

    Parameters
    ----------
    params : GameParams
    allow_no_byzantine : bool
        Accept ``f = 0``. Regime classification treats it as the no-Byzantine case.

    Raises
    ------
    RangeViolated
        ``n``, ``f`` or ``nu`` outside their domain.
    OrderingViolated
        ``kappa > R > c_check > c_send > 0`` does not hold.

    """
    validate_ranges(params, allow_no_byzantine)
    if not params.kappa > params.reward > params.cost_check > params.cost_send > 0:
        raise OrderingViolated(
            "kappa > R > c_check > c_send > 0 must hold, got "
            f"kappa={params.kappa}, R={params.reward}, "
            f"c_check={params.cost_check}, c_send={params.cost_send}"
        )
