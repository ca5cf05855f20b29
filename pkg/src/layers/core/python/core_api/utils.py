# -*- coding: utf-8 -*-
import simplejson as json

__all__ = ["get_body", "get_exit_code", "get_scenario", "get_options"]

from typing import Union


def get_body(response: Union[str, dict]):
    """
    Get the decoded body of a command response.
    Parameters
    ----------
    response : dict

    Returns
    -------
    dict
        dictionary with body information.

    Examples
    --------
    >>> from core_api.utils import get_body
    >>> get_body({"body": '{"a": 1}'})
    {'a': 1}

    """
    if isinstance(response, str):
        response = json.loads(response)
    body = response.get("body")
    if isinstance(body, str):
        return json.loads(body)
    return body


def get_exit_code(response):
    """
    Get the exit code of a command response.

    Examples
    --------
    >>> from core_api.utils import get_exit_code
    >>> get_exit_code({"exitCode": 4})
    4

    """
    return response.get("exitCode")


def get_scenario(event: Union[str, dict]) -> dict:
    """
    Get the raw ``KEY=value`` scenario mapping of a command event.
    """
    if isinstance(event, str):
        event = json.loads(event)
    return dict(event.get("scenario") or {})


def get_options(event: Union[str, dict]) -> dict:
    if isinstance(event, str):
        event = json.loads(event)
    return {key: value for key, value in (event.get("options") or {}).items() if value is not None}
