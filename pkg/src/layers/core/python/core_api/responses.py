# -*- coding: utf-8 -*-
import simplejson as json

from core_utils.error import (
    EnumerationTooLarge,
    GameException,
    ParamsError,
    PreconditionViolated,
    ScenarioError,
)
from core_utils.utils import cast_default
from core_utils.utils import get_logger

__all__ = [
    "command_response",
    "create_body",
    "exit_code_for",
    "error_response",
    "EXIT_OK",
    "EXIT_CONFIG_ERROR",
    "EXIT_ENGINE_ERROR",
    "EXIT_PROFITABLE_DEVIATION",
    "EXIT_INCONCLUSIVE",
]

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_ENGINE_ERROR = 3
EXIT_PROFITABLE_DEVIATION = 4
EXIT_INCONCLUSIVE = 5

CONFIG_ERRORS = (ParamsError, ScenarioError, EnumerationTooLarge, PreconditionViolated)

LAYER_NAME = 'layer-api-responses'
LOGGER = get_logger(LAYER_NAME)


def exit_code_for(error: Exception) -> int:
    """
    Exit code of a failed command.

    Examples
    --------
    >>> from core_utils.error import OrderingViolated
    >>> exit_code_for(OrderingViolated("kappa <= R"))
    2

    """
    return EXIT_CONFIG_ERROR if isinstance(error, CONFIG_ERRORS) else EXIT_ENGINE_ERROR


def error_response(error: Exception) -> dict:
    """
    Command response of a failed command, for ``lambda_interceptor(on_error=...)``.

    Examples
    --------
    >>> from core_utils.error import ScenarioError
    >>> error_response(ScenarioError("N is required"))["exitCode"]
    2

    """
    exit_code = exit_code_for(error)
    detail = error.message if isinstance(error, GameException) else str(error)
    body = create_body(None, message=f"{type(error).__name__}: {detail}", error=str(exit_code))
    return command_response(body, exit_code)


def create_body(response, message=None, error=None):
    """
        Build the body of a command response.
        Parameters
        ----------
        response : Any
            The result of the command.
        message : Str
            The message response
        error : Str
            The error code

        Returns
        -------
        dict
            The body returned to the caller.

        Examples
        --------
        >>> from core_api.responses import create_body
        >>> create_body({"records": []})

        """
    body = {
        "response_code": "0",
        "description": "SUCCESS",
        "response":  []
    }

    if response is not None:
        body['response'] = response

        if error is None:
            LOGGER.debug({'SUCCESS_RESPONSE': body['description']})
            return body

    response_code = 'BFT' + str(error)

    LOGGER.error({'Error ' + response_code: message})
    body['response_code'] = response_code
    body['description'] = message

    return body


def command_response(body, exit_code=EXIT_OK):
    """
    Serialize a command body.
    Parameters
    ----------
    body : Any
        The body of the command response.
    exit_code : int

    Returns
    -------
    dict
        ``exitCode`` and the JSON text of the body.

    Examples
    --------
    >>> from core_api.responses import command_response
    >>> command_response({"foo": "bar"}, 0)
    {'exitCode': 0, 'body': '{"foo": "bar"}'}

    """
    try:
        body = json.dumps(body, default=cast_default, ensure_ascii=False, ignore_nan=True)
    except Exception as details:
        LOGGER.error({'serialization_error': str(details)})
        raise details
    else:
        return {
            "exitCode": exit_code,
            "body": body,
        }
