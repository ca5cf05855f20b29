# -*- coding: utf-8 -*-
"""
Exception errors.
"""

__all__ = [
    "GameException",
    "ParamsError",
    "OrderingViolated",
    "RangeViolated",
    "RangeError",
    "PreconditionViolated",
    "StrategyDomainError",
    "AnalyticDivisionByZero",
    "InfeasibleConditioning",
    "EnumerationTooLarge",
    "GameOverError",
    "ScenarioError",
]


class GameException(Exception):
    def __init__(self, message):
        super().__init__(message)
        self.message = message


class ParamsError(GameException):
    """Game constants break one of the standing assumptions."""


class OrderingViolated(ParamsError):
    """kappa > R > c_check > c_send > 0 does not hold."""


class RangeViolated(ParamsError):
    """n, f or nu out of range."""


class RangeError(GameException):
    """Round or index argument outside the domain of an analytic function."""


class PreconditionViolated(GameException):
    pass


class StrategyDomainError(GameException):
    """A strategy produced an action outside the representable behaviours."""


class AnalyticDivisionByZero(GameException):
    pass


class InfeasibleConditioning(GameException):
    """No Byzantine seating is consistent with the requested observation prefix."""


class EnumerationTooLarge(GameException):
    pass


class GameOverError(GameException):
    """The block was accepted, so the game has no further round."""


class ScenarioError(GameException):
    """Malformed scenario file or command option."""
