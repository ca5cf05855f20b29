from core_api.reports import write_report
from core_api.responses import (
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_PROFITABLE_DEVIATION,
    command_response,
    create_body,
    error_response,
)
from core_api.scenario import parse_scenario
from core_api.utils import get_options, get_scenario
from core_equilibrium.verifier import verify_equilibrium
from core_utils.decorators import lambda_interceptor
from core_utils.enum import Verdict
from core_utils.utils import get_logger

LOGGER = get_logger("verify_equilibrium")

EXIT_CODES = {
    Verdict.DOMINATED: EXIT_OK,
    Verdict.PROFITABLE: EXIT_PROFITABLE_DEVIATION,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


@lambda_interceptor(logger=LOGGER, on_error=error_response)
def lambda_handler(event, context):
    scenario = parse_scenario(get_scenario(event), get_options(event))
    params = scenario.params
    report = verify_equilibrium(
        params,
        scenario.build_profile(params),
        mode=scenario.mode,
        belief=scenario.belief,
        players=scenario.verify_players,
        rounds=scenario.verify_rounds,
        trials=scenario.trials,
        seed=scenario.seed,
        bound=scenario.exact_bound,
    )
    if report.mismatched_closed_forms:
        LOGGER.warning({"closed_form_mismatches": [entry.as_record() for entry in report.mismatched_closed_forms]})
    records = [{"record": "deviation", **entry.as_record()} for entry in report.entries]
    summary = {
        "profile": report.profile,
        "mode": report.mode.value,
        "belief": report.belief.value,
        "verdict": report.verdict.value,
        "checked": len(report.entries),
        "profitable": len(report.profitable),
        "inconclusive": len(report.inconclusive),
        "off_path": len(report.skipped),
        "closed_form_mismatches": len(report.mismatched_closed_forms),
    }
    text = write_report(
        "verify", scenario.resolved_config(), records + [{"record": "summary", **summary}],
        scenario.report_format, scenario.output,
    )
    response = {
        "kind": "verify",
        "records": records,
        "summary": [summary],
        "report": None if scenario.output else text,
    }
    return command_response(create_body(response), EXIT_CODES[report.verdict])
