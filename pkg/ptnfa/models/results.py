"""
Result types returned by the services.

Words are tuples of letter symbols; state sets are frozensets of state
names.
"""
from dataclasses import dataclass, field
from typing import Any, FrozenSet, List, Optional, Tuple

from ptnfa.models.schemas import WitnessDocument, WitnessKind

Word = Tuple[str, ...]


@dataclass(frozen=True)
class Witness:
    """Evidence attached to a verdict, tagged by kind."""
    kind: WitnessKind
    value: Any

    def to_document(self) -> WitnessDocument:
        """Convert to the JSON-compatible report form."""
        return WitnessDocument(kind=self.kind, value=to_jsonable(self.value))


@dataclass(frozen=True)
class Verdict:
    """
    Decision result.

    `conclusive` is False for one-sided checks whose negative answer
    proves nothing.
    """
    answer: bool
    witness: Optional[Witness] = None
    conclusive: bool = True
    detail: str = ""

    def __bool__(self) -> bool:
        return self.answer


@dataclass(frozen=True)
class UmsViolation:
    """State p whose component in G(A, sigma(p)) has a maximal state other than p."""
    state: str
    component: FrozenSet[str]
    maximal_states: FrozenSet[str]


@dataclass
class PtReport:
    """Outcome of the three ptNFA conditions."""
    partially_ordered: bool
    complete: bool
    ums: Optional[bool]
    violations: List[Witness] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.partially_ordered and self.complete and bool(self.ums)

    def __bool__(self) -> bool:
        return self.verdict


@dataclass(frozen=True)
class KptCounterexample:
    """Words u ~k v of which exactly one is accepted."""
    u: Word
    v: Word
    k: int


def to_jsonable(value: Any) -> Any:
    """Recursively turn result values into JSON-compatible data."""
    if isinstance(value, (frozenset, set)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, UmsViolation):
        return {
            "state": value.state,
            "component": sorted(value.component),
            "maximal_states": sorted(value.maximal_states),
        }
    if isinstance(value, KptCounterexample):
        return {"u": list(value.u), "v": list(value.v), "k": value.k}
    return value
