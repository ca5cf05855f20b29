from core_api.reports import write_report
from core_api.responses import EXIT_OK, command_response, create_body, error_response
from core_api.scenario import parse_scenario
from core_api.utils import get_options, get_scenario
from core_payoff.tables import analytics_table
from core_payoff.thresholds import (
    kappa_threshold,
    kappa_threshold_exact,
    kappa_threshold_terminal,
    reward_threshold,
    validity_conditions_hold,
)
from core_utils.decorators import lambda_interceptor
from core_utils.error import AnalyticDivisionByZero
from core_utils.utils import get_logger

LOGGER = get_logger("payoff_analytics")


def _thresholds(params):
    record = {
        "record": "thresholds",
        "kappa_threshold": None,
        "kappa_threshold_terminal": None,
        "kappa_threshold_exact": None,
        "reward_threshold": reward_threshold(params),
        "validity_conditions": validity_conditions_hold(params),
    }
    if record["validity_conditions"]:
        record["kappa_threshold_exact"] = kappa_threshold_exact(params)
    if params.f >= 1:
        try:
            record["kappa_threshold"] = kappa_threshold(params)
            record["kappa_threshold_terminal"] = kappa_threshold_terminal(params)
        except AnalyticDivisionByZero as error:
            LOGGER.warning({"thresholds": error.message})
    return record


@lambda_interceptor(logger=LOGGER, on_error=error_response)
def lambda_handler(event, context):
    scenario = parse_scenario(get_scenario(event), get_options(event))
    params = scenario.params
    rows = [{"record": "round", **row} for row in analytics_table(params)]
    records = rows + [_thresholds(params)]
    text = write_report("analytics", scenario.resolved_config(), records, scenario.report_format, scenario.output)
    response = {
        "kind": "analytics",
        "records": records,
        "summary": rows,
        "report": None if scenario.output else text,
    }
    return command_response(create_body(response), EXIT_OK)
