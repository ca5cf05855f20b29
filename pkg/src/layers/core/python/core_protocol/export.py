# -*- coding: utf-8 -*-
"""
Flat records of an executed height, one per round, outcome and player payoff.
"""
from typing import List

from core_protocol.engine import ExecutionTrace
from core_protocol.ledger import PayoffLedger
from core_protocol.properties import ConsensusVerdict

__all__ = ["export_trace", "outcome_record"]


def outcome_record(run: int, trace: ExecutionTrace, verdict: ConsensusVerdict) -> dict:
    return {
        "record": "outcome",
        "run": run,
        "byzantine": trace.assignment.as_list(),
        "profile": trace.profile_name,
        "termination_round": trace.termination_round,
        "accepted": trace.accepted,
        "accepted_block_valid": trace.accepted_block_valid,
        **verdict.as_record(),
    }


def export_trace(trace: ExecutionTrace, ledger: PayoffLedger, verdict: ConsensusVerdict, run: int = 1) -> List[dict]:
    """Round records in order, then the outcome, then one payoff per rational player."""
    records = []
    players = range(1, trace.params.n + 1)
    for record in trace.rounds:
        records.append({
            "record": "round",
            "run": run,
            "round": record.round,
            "proposer": record.proposer_index,
            "proposer_type": record.proposer_type.value,
            "block_valid": record.block_valid,
            "messages": record.message_count,
            "accepted": record.accepted,
            "checkers": [index for index in players if record.action_of(index).checked],
            "senders": [index for index in players if record.action_of(index).sent],
        })
    records.append(outcome_record(run, trace, verdict))
    for entry in ledger.entries.values():
        records.append({"record": "payoff", "run": run, **entry.as_record()})
    return records
