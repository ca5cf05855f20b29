from core_api.reports import write_report
from core_api.responses import EXIT_OK, command_response, create_body, error_response
from core_api.scenario import parse_scenario
from core_api.utils import get_options, get_scenario
from core_equilibrium.montecarlo import sample_seatings
from core_protocol.engine import run_height
from core_protocol.export import export_trace
from core_protocol.properties import evaluate_consensus_properties
from core_utils.decorators import lambda_interceptor
from core_utils.enum import AssignmentKind
from core_utils.utils import get_logger

LOGGER = get_logger("simulate_height")


def _seatings(scenario, params):
    if scenario.assignment is AssignmentKind.UNIFORM_RANDOM:
        return sample_seatings(params.n, params.f, scenario.assignment_trials, scenario.assignment_seed)
    return [scenario.build_assignment(params)]


@lambda_interceptor(logger=LOGGER, on_error=error_response)
def lambda_handler(event, context):
    scenario = parse_scenario(get_scenario(event), get_options(event))
    params = scenario.params
    profile = scenario.build_profile(params)

    records, summary = [], []
    for run, seating in enumerate(_seatings(scenario, params), start=1):
        trace, ledger = run_height(params, seating, profile, max_rounds=scenario.max_rounds)
        verdict = evaluate_consensus_properties(trace)
        run_records = export_trace(trace, ledger, verdict, run)
        records.extend(run_records)
        summary.append(next(record for record in run_records if record["record"] == "outcome"))

    runs = len(summary)
    LOGGER.info({
        "runs": runs,
        "accepted": sum(row["accepted"] for row in summary),
        "invalid_accepted": sum(row["accepted_block_valid"] is False for row in summary),
    })
    text = write_report("simulate", scenario.resolved_config(), records, scenario.report_format, scenario.output)
    response = {
        "kind": "simulate",
        "records": records,
        "summary": summary,
        "report": None if scenario.output else text,
    }
    return command_response(create_body(response), EXIT_OK)
