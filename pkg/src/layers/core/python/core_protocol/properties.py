# -*- coding: utf-8 -*-
"""
Consensus properties of a finished height.
"""
from dataclasses import dataclass

from core_protocol.engine import ExecutionTrace

__all__ = ["ConsensusVerdict", "evaluate_consensus_properties"]


@dataclass(frozen=True)
class ConsensusVerdict:
    termination: bool
    termination_all_decided: bool
    agreement: bool
    validity: bool

    def as_record(self) -> dict:
        return {
            "termination": self.termination,
            "termination_all_decided": self.termination_all_decided,
            "agreement": self.agreement,
            "validity": self.validity,
        }


def evaluate_consensus_properties(trace: ExecutionTrace) -> ConsensusVerdict:
    """
    ``termination`` holds when some block was accepted and
    ``termination_all_decided`` when every rational player voted for it.
    ``validity`` fails only when the accepted block is invalid.
    """
    rational = trace.assignment.rational_indexes()
    final = trace.rounds[-1]
    decided_rounds = {
        record.round for record in trace.rounds
        if record.accepted and any(record.action_of(index).sent for index in rational)
    }
    return ConsensusVerdict(
        termination=trace.accepted,
        termination_all_decided=trace.accepted and all(final.action_of(index).sent for index in rational),
        agreement=len(decided_rounds) <= 1,
        validity=not (trace.accepted and trace.accepted_block_valid is False),
    )
