# -*- coding: utf-8 -*-
"""
The per-round action of a player and the six behaviours a receiver can take.
"""
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from core_utils.enum import SendRule
from core_utils.error import StrategyDomainError

__all__ = [
    "RoundAction",
    "realize_send",
    "ABSTAIN",
    "SEND_BLIND",
    "CHECK_SILENT",
    "CHECK_SEND_ALWAYS",
    "CHECK_SEND_IF_VALID",
    "CHECK_SEND_IF_INVALID",
    "RECEIVER_ACTIONS",
    "enumerate_receiver_actions",
    "parse_action",
]

CONTINGENT_RULES = (SendRule.IFF_VALID, SendRule.IFF_INVALID)


@dataclass(frozen=True)
class RoundAction:
    """
    What a player does in one round.

    ``propose_valid`` is only read when the player is the round's proposer.
    A contingent send rule without a check cannot be represented.
    """
    check: bool
    send_rule: SendRule
    propose_valid: Optional[bool] = None

    def __post_init__(self):
        if not isinstance(self.send_rule, SendRule):
            raise StrategyDomainError(f"unknown send rule {self.send_rule!r}")
        if self.send_rule in CONTINGENT_RULES and not self.check:
            raise StrategyDomainError(
                f"{self.send_rule.value} needs a check, the validity would be unknown"
            )

    @property
    def behaviour(self) -> Tuple[bool, SendRule]:
        return self.check, self.send_rule

    def with_proposal(self, valid: Optional[bool]) -> "RoundAction":
        return replace(self, propose_valid=valid)

    def same_behaviour(self, other: "RoundAction") -> bool:
        return self.behaviour == other.behaviour

    @property
    def label(self) -> str:
        check = "check" if self.check else "nocheck"
        text = f"{check}/{self.send_rule.value}"
        if self.propose_valid is not None:
            text += "/propose_valid" if self.propose_valid else "/propose_invalid"
        return text


def realize_send(action: RoundAction, block_valid: bool) -> bool:
    """
    Whether the action ends up sending a vote once the block validity is fixed.

    Examples
    --------
    >>> realize_send(CHECK_SEND_IF_VALID, False)
    False

    """
    rule = action.send_rule
    if rule is SendRule.ALWAYS:
        return True
    if rule is SendRule.NEVER:
        return False
    if not action.check:
        raise StrategyDomainError(f"{rule.value} without a check")
    if rule is SendRule.IFF_VALID:
        return block_valid
    return not block_valid


ABSTAIN = RoundAction(check=False, send_rule=SendRule.NEVER)
SEND_BLIND = RoundAction(check=False, send_rule=SendRule.ALWAYS)
CHECK_SILENT = RoundAction(check=True, send_rule=SendRule.NEVER)
CHECK_SEND_ALWAYS = RoundAction(check=True, send_rule=SendRule.ALWAYS)
CHECK_SEND_IF_VALID = RoundAction(check=True, send_rule=SendRule.IFF_VALID)
CHECK_SEND_IF_INVALID = RoundAction(check=True, send_rule=SendRule.IFF_INVALID)

RECEIVER_ACTIONS = (
    ABSTAIN,
    SEND_BLIND,
    CHECK_SEND_IF_VALID,
    CHECK_SEND_IF_INVALID,
    CHECK_SEND_ALWAYS,
    CHECK_SILENT,
)


def enumerate_receiver_actions() -> Tuple[RoundAction, ...]:
    """The six behaviours of a non-proposer, always in the same order."""
    return RECEIVER_ACTIONS


_CHECK_WORDS = {"check": True, "nocheck": False, "no_check": False}


def parse_action(text: str) -> RoundAction:
    """
    Parse ``"<check|nocheck>,<never|always|send_iff_valid|send_iff_invalid>"``.

    Examples
    --------
    >>> parse_action("check,send_iff_valid") == CHECK_SEND_IF_VALID
    True

    """
    parts = [part.strip().lower() for part in str(text).replace("/", ",").split(",")]
    if len(parts) != 2 or parts[0] not in _CHECK_WORDS:
        raise StrategyDomainError(f"'{text}' is not '<check|nocheck>,<send rule>'")
    try:
        rule = SendRule(parts[1])
    except ValueError:
        raise StrategyDomainError(f"'{parts[1]}' is not a send rule")
    return RoundAction(check=_CHECK_WORDS[parts[0]], send_rule=rule)
