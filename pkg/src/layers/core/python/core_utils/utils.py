# -*- coding: utf-8 -*-
"""
Helper functions for working with Python.
"""

import dataclasses
import os
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from aws_lambda_powertools import Logger

from core_utils.error import ScenarioError

__all__ = [
    "get_logger",
    "cast_default",
    "cast_fraction",
    "cast_number",
    "fraction_to_str",
    "expand_rationals",
    "parse_bool",
    "parse_int_list",
    "parse_value_list",
]

LOG_LEVELS = {"1": "DEBUG", "2": "INFO", "3": "WARNING", "4": "ERROR", "5": "CRITICAL"}


def get_logger(name=None):
    """
    Returns a logger object.

    Parameters
    ----------
    name : str

    Returns
    -------
    logger : Logger

    Examples
    --------
    >>> from core_utils.utils import get_logger
    >>> logger = get_logger("my_logger")

    """
    level_log = LOG_LEVELS.get(os.environ.get("LOG_LEVEL", "2"))
    return Logger(
        service=name,
        level=level_log,
        log_record_order=["level", "message"],
        location=None,
        sampling_rate=None,
    )


def cast_default(o):
    """
    Cast data to default data for json serialization.

    Exact rationals are rendered as ``"numerator/denominator"`` strings so
    reports never lose precision.

    Parameters
    ----------
    o : Any

    Returns
    -------
    Any object with the default data type for json serialization.

    Examples
    --------
    >>> from core_utils.utils import cast_default
    >>> cast_default(Fraction(3, 4))
    '3/4'

    """
    if isinstance(o, Fraction):
        return fraction_to_str(o)
    if isinstance(o, Decimal):
        return cast_number(o)
    if isinstance(o, Enum):
        return o.value
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if dataclasses.is_dataclass(o) and not isinstance(o, type):
        return dataclasses.asdict(o)
    if hasattr(o, "model_dump"):
        return o.model_dump()
    raise TypeError(f"Object of type {type(o).__name__} is not JSON serializable")


def fraction_to_str(value: Fraction) -> str:
    """
    >>> fraction_to_str(Fraction(6, 1))
    '6'
    >>> fraction_to_str(Fraction(59, 9))
    '59/9'
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def cast_fraction(value: Union[str, int, float, Decimal, Fraction]) -> Fraction:
    """
    Cast a literal into an exact rational.

    Parameters
    ----------
    value : str, int, Decimal or Fraction
        Strings may be integers, decimals (``"2.5"``) or ratios (``"5/2"``).

    Returns
    -------
    Fraction

    Examples
    --------
    >>> from core_utils.utils import cast_fraction
    >>> cast_fraction("41/30")
    Fraction(41, 30)

    """
    if isinstance(value, bool):
        raise ScenarioError(f"'{value}' is not a number")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # Floats go through their shortest repr so 0.1 stays 1/10.
        value = repr(value)
    try:
        return Fraction(str(value).strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ScenarioError(f"'{value}' is not a number")


def cast_number(number: Union[str, Decimal]) -> Union[int, float]:
    """
    Cast a string or Decimal object to int or float.

    Parameters
    ----------
    number : str or Decimal

    Returns
    -------
    int or float

    Examples
    --------
    >>> from core_utils.utils import cast_number
    >>> cast_number(Decimal("1.5"))
    1.5

    """
    if isinstance(number, str):
        if number.isnumeric():
            return int(number)
        try:
            return float(number)
        except ValueError:
            raise ScenarioError(f"'{number}' is not int or float")
    elif isinstance(number, Decimal):
        return cast_number(str(number))
    elif isinstance(number, (float, int)):
        return number


def expand_rationals(record: Dict[str, Any]) -> Dict[str, Any]:
    """
    Add a ``<key>_decimal`` float column right after every exact rational.

    Examples
    --------
    >>> expand_rationals({"t": 2, "phi": Fraction(11, 9)})
    {'t': 2, 'phi': Fraction(11, 9), 'phi_decimal': 1.2222222222222223}

    """
    expanded = {}
    for key, value in record.items():
        expanded[key] = value
        if isinstance(value, Fraction):
            expanded[f"{key}_decimal"] = float(value)
    return expanded


def parse_bool(value: Optional[str], default: bool = False) -> bool:
    if value is None or str(value).strip() == "":
        return default
    lowered = str(value).strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ScenarioError(f"'{value}' is not a boolean")


def parse_value_list(value: str) -> List[str]:
    """
    Split a comma separated list or expand an integer range written ``a..b``.

    Examples
    --------
    >>> parse_value_list("1..3")
    ['1', '2', '3']
    >>> parse_value_list("12, 14,20")
    ['12', '14', '20']

    """
    text = str(value).strip()
    if not text:
        return []
    if ".." in text and "," not in text:
        start, _, stop = text.partition("..")
        try:
            low, high = int(start), int(stop)
        except ValueError:
            raise ScenarioError(f"'{value}' is not an integer range")
        return [str(v) for v in range(low, high + 1)]
    return [item.strip() for item in text.split(",") if item.strip()]


def parse_int_list(value: str) -> List[int]:
    try:
        return [int(item) for item in parse_value_list(value)]
    except ValueError:
        raise ScenarioError(f"'{value}' is not a list of integers")
