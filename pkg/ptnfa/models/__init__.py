"""Schemas and result types for ptnfa."""
from ptnfa.models.results import (
    KptCounterexample,
    PtReport,
    UmsViolation,
    Verdict,
    Witness,
    Word,
)
from ptnfa.models.schemas import (
    AutomatonDocument,
    CnfFormula,
    CommandStatus,
    InputDigest,
    ReportDocument,
    ThreeCnfFormula,
    WitnessDocument,
    WitnessKind,
)

__all__ = [
    # Results
    "KptCounterexample",
    "PtReport",
    "UmsViolation",
    "Verdict",
    "Witness",
    "Word",
    # Schemas
    "AutomatonDocument",
    "CnfFormula",
    "CommandStatus",
    "InputDigest",
    "ReportDocument",
    "ThreeCnfFormula",
    "WitnessDocument",
    "WitnessKind",
]
