"""
Report values shared by the bound verifiers and the surface checks.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

import mpmath

from .choices import Verdict
from .reporting import decimal_str, rat_str

LOWER = 'lower'
UPPER = 'upper'


def render(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return rat_str(value)
    if isinstance(value, mpmath.mpf):
        return decimal_str(value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    return value


def verdict_for_slack(slack: Fraction) -> Verdict:
    if slack < 0:
        return Verdict.VIOLATED
    return Verdict.EQUALITY if slack == 0 else Verdict.HOLDS


@dataclass(frozen=True)
class BoundEntry:
    index: int
    name: str
    sense: str
    bound: Any
    actual: Any
    verdict: Verdict
    slack: Optional[Any] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'name': self.name,
            'sense': self.sense,
            'bound': render(self.bound),
            'actual': render(self.actual),
            'slack': render(self.slack),
            'verdict': str(self.verdict.value),
        }


def exact_entry(index: int, name: str, sense: str, bound: Fraction, actual: Fraction) -> BoundEntry:
    """Entry for an exact inequality; slack is actual - bound for lower bounds."""
    slack = Fraction(actual) - Fraction(bound) if sense == LOWER else Fraction(bound) - Fraction(actual)
    return BoundEntry(index, name, sense, Fraction(bound), Fraction(actual), verdict_for_slack(slack), slack)


def summarize(entries: Iterable[BoundEntry]) -> Verdict:
    verdicts = [e.verdict for e in entries]
    if Verdict.VIOLATED in verdicts:
        return Verdict.VIOLATED
    if verdicts and all(v == Verdict.EQUALITY for v in verdicts):
        return Verdict.EQUALITY
    return Verdict.HOLDS


@dataclass(frozen=True)
class BoundReport:
    suite: str
    polytope: str
    entries: Tuple[BoundEntry, ...]
    verdict: Verdict
    polytope_id: int = 0
    kind: str = 'theorem'
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.kind == 'theorem' and self.verdict == Verdict.VIOLATED

    def with_source(self, polytope: str, polytope_id: int) -> 'BoundReport':
        return BoundReport(self.suite, polytope, self.entries, self.verdict, polytope_id, self.kind, self.notes)

    def to_json(self) -> Dict[str, Any]:
        return {
            'suite': str(self.suite),
            'polytope': self.polytope,
            'id': self.polytope_id,
            'kind': self.kind,
            'verdict': str(self.verdict.value),
            'entries': [e.to_json() for e in self.entries],
            'notes': {k: render(v) for k, v in self.notes.items()},
        }


def not_applicable(suite: str, reason: str) -> BoundReport:
    return BoundReport(suite, '', (), Verdict.NOT_APPLICABLE, notes={'reason': reason})
