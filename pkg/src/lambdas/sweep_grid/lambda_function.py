from core_api.reports import write_report
from core_api.responses import EXIT_OK, command_response, create_body, error_response
from core_api.scenario import parse_scenario
from core_api.sweep import run_sweep
from core_api.utils import get_options, get_scenario
from core_utils.decorators import lambda_interceptor
from core_utils.utils import get_logger, parse_bool

LOGGER = get_logger("sweep_grid")


@lambda_interceptor(logger=LOGGER, on_error=error_response)
def lambda_handler(event, context):
    options = get_options(event)
    scenario = parse_scenario(get_scenario(event), options)
    rows = run_sweep(scenario, progress=parse_bool(options.get("progress"), default=False))
    text = write_report("sweep", scenario.resolved_config(), rows, scenario.report_format, scenario.output)
    response = {
        "kind": "sweep",
        "records": rows,
        "summary": rows,
        "report": None if scenario.output else text,
    }
    return command_response(create_body(response), EXIT_OK)
