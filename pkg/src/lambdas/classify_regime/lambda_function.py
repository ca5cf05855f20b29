from core_api.reports import write_report
from core_api.responses import EXIT_OK, command_response, create_body, error_response
from core_api.scenario import parse_scenario
from core_api.utils import get_options, get_scenario
from core_payoff.regime import classify_regime
from core_utils.decorators import lambda_interceptor
from core_utils.utils import get_logger

LOGGER = get_logger("classify_regime")


@lambda_interceptor(logger=LOGGER, on_error=error_response)
def lambda_handler(event, context):
    scenario = parse_scenario(get_scenario(event), get_options(event))
    params = scenario.params_at({}, checked=False)
    classification = classify_regime(params)
    record = {"record": "classification", **params.as_record(), **classification.as_record()}
    conditions = [{"record": "condition", **condition.as_record()} for condition in classification.conditions]
    records = [record] + conditions
    text = write_report("classify", scenario.resolved_config(), records, scenario.report_format, scenario.output)
    response = {
        "kind": "classify",
        "records": records,
        "summary": conditions,
        "report": None if scenario.output else text,
    }
    return command_response(create_body(response), EXIT_OK)
