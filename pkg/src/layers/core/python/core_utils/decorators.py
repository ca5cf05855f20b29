import warnings

from aws_lambda_powertools import Logger
from typing import Any, Callable, Dict, Optional
from functools import wraps, partial

from core_utils.error import GameException

__all__ = [
    "lambda_interceptor",
    "ignore_warnings"
]


def lambda_interceptor(function: Callable[[Dict, Any], Any] = None,
                       logger: Logger = None,
                       on_error: Optional[Callable[[Exception], Any]] = None):
    """
    Log the event and the response of a command handler.

    Errors are logged and re-raised, or handed to ``on_error`` whose result
    becomes the response when it is given.
    """
    if not logger:
        raise AttributeError('logger is required')
    if function is None:
        return partial(lambda_interceptor, logger=logger, on_error=on_error)

    @wraps(function)
    def decorator(event, context):
        try:
            logger.info({'Event': event})
        except Exception as e:
            logger.debug(str(e))
        try:
            response = function(event, context)
        except GameException as e:
            logger.error({'error': type(e).__name__, 'message': e.message})
            if on_error is None:
                raise e
            return on_error(e)
        except Exception as e:
            logger.exception(e)
            if on_error is None:
                raise e
            return on_error(e)
        logger.debug({'command response': response})
        return response

    return decorator


def ignore_warnings(test_func):
    """
    Decorator
    use:
        @ignore_warnings
        def test_lambda_handler(self):
            "your logic"
            pass

    Ignore warnings raised by process pools and numpy while a test runs.
    """

    def do_test(self, *args, **kwargs):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ResourceWarning)
            warnings.simplefilter("ignore", RuntimeWarning)
            test_func(self, *args, **kwargs)

    return do_test
