from enum import Enum

__all__ = [
    "PlayerType",
    "Validity",
    "SendRule",
    "Regime",
    "BeliefModel",
    "EvaluationMode",
    "Verdict",
    "ReportFormat",
    "AssignmentKind",
]


class PlayerType(str, Enum):
    BYZANTINE = "byzantine"
    RATIONAL = "rational"


class Validity(Enum):
    UNKNOWN = None
    INVALID = 0
    VALID = 1


class SendRule(str, Enum):
    NEVER = "never"
    ALWAYS = "always"
    IFF_VALID = "send_iff_valid"
    IFF_INVALID = "send_iff_invalid"


class Regime(str, Enum):
    INVALID_ACCEPTANCE = "invalid_acceptance"
    COORDINATION_FAILURE = "coordination_failure_exists"
    VALIDITY_AND_TERMINATION = "validity_and_termination"
    NO_BYZANTINE = "no_byzantine"
    UNCLASSIFIED = "unclassified"


class BeliefModel(str, Enum):
    PRIOR = "prior"
    OWN_TYPE = "own_type"


class EvaluationMode(str, Enum):
    EXACT = "exact"
    MC = "mc"


class Verdict(str, Enum):
    DOMINATED = "dominated"
    PROFITABLE = "profitable"
    INCONCLUSIVE = "inconclusive"


class ReportFormat(str, Enum):
    CSV = "csv"
    STRUCTURED = "structured"


class AssignmentKind(str, Enum):
    EXPLICIT = "explicit"
    WORST_CASE = "worst-case"
    UNIFORM_RANDOM = "uniform-random"
