"""
Pydantic schemas for ptnfa.

Everything that crosses the process boundary: automaton documents,
CNF formulas and command reports.
"""
from enum import Enum
from typing import Any, Dict, List, Optional, Set

from pydantic import BaseModel, Field, field_validator, model_validator


class WitnessKind(str, Enum):
    """Kind tag of the evidence attached to a verdict."""
    WORD = "word"
    WORD_PAIR = "word_pair"
    STATE = "state"
    STATE_SET = "state_set"
    LETTER_CHECK = "letter_check"
    UMS_VIOLATIONS = "ums_violations"
    KPT_COUNTEREXAMPLE = "kpt_counterexample"
    POWER_PATTERN = "power_pattern"


class CommandStatus(str, Enum):
    """Outcome of a command; the value doubles as the exit code name."""
    YES = "yes"
    NO = "no"
    ERROR = "error"


# -------------------- AUTOMATON DOCUMENT --------------------

class AutomatonDocument(BaseModel):
    """
    On-disk representation of an automaton.

    Letters and states are strings so that names like "a10" and "-3"
    survive unchanged.
    """
    alphabet: List[str] = Field(..., min_length=1)
    states: List[str] = Field(..., min_length=1)
    initial: List[str] = Field(default_factory=list)
    accepting: List[str] = Field(default_factory=list)
    transitions: List[List[str]] = Field(default_factory=list)

    @field_validator("alphabet")
    @classmethod
    def letters_are_tokens(cls, v: List[str]) -> List[str]:
        for symbol in v:
            if not symbol or any(ch.isspace() for ch in symbol) or "," in symbol:
                raise ValueError(
                    f"letter {symbol!r} must be nonempty without whitespace or commas"
                )
        return v

    @field_validator("transitions")
    @classmethod
    def transitions_are_triples(cls, v: List[List[str]]) -> List[List[str]]:
        for position, triple in enumerate(v):
            if len(triple) != 3:
                raise ValueError(
                    f"transition #{position} {triple!r} is not a [from, letter, to] triple"
                )
        return v


# -------------------- CNF FORMULAS --------------------

class CnfFormula(BaseModel):
    """
    Clause list over variables 1..num_vars.

    A clause is a set of nonzero integers; a negative literal is a
    negated variable. No clause may contain both x and -x.
    """
    num_vars: int = Field(..., ge=1)
    clauses: List[Set[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def literals_in_range(self) -> "CnfFormula":
        for position, clause in enumerate(self.clauses):
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_vars:
                    raise ValueError(
                        f"clause #{position} has literal {literal} outside 1..{self.num_vars}"
                    )
                if -literal in clause:
                    raise ValueError(
                        f"clause #{position} contains both {abs(literal)} and its negation"
                    )
        return self

    def evaluate(self, assignment: Dict[int, bool]) -> bool:
        """
        Evaluate the formula under a total assignment.

        Args:
            assignment: Variable -> truth value.

        Returns:
            True if every clause has a true literal.
        """
        return all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


class ThreeCnfFormula(CnfFormula):
    """CNF formula whose clauses have exactly three literals on distinct variables."""

    @model_validator(mode="after")
    def three_distinct_variables(self) -> "ThreeCnfFormula":
        for position, clause in enumerate(self.clauses):
            variables = {abs(lit) for lit in clause}
            if len(clause) != 3 or len(variables) != 3:
                raise ValueError(
                    f"clause #{position} must have three literals on distinct variables"
                )
        return self


# -------------------- REPORTS --------------------

class WitnessDocument(BaseModel):
    """Serialized witness; `value` is JSON-compatible."""
    kind: WitnessKind
    value: Any


class InputDigest(BaseModel):
    """Input file echo."""
    path: str
    sha256: str


class ReportDocument(BaseModel):
    """Machine-readable result of one command."""
    command: List[str]
    status: CommandStatus
    inputs: List[InputDigest] = Field(default_factory=list)
    verdicts: Dict[str, Optional[bool]] = Field(default_factory=dict)
    values: Dict[str, Any] = Field(default_factory=dict)
    witnesses: List[WitnessDocument] = Field(default_factory=list)
    messages: List[str] = Field(default_factory=list)
    elapsed_ms: float = 0.0
