"""Verdict records produced by the theorem checkers and the sweep harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"
PRECONDITION = "precondition-failed"


def render_value(value: Any) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return "(" + ",".join(render_value(v) for v in value) + ")"
    if isinstance(value, (list, frozenset, set)):
        return "{" + ",".join(render_value(v) for v in sorted(value)) + "}"
    return str(value)


@dataclass(frozen=True)
class Clause:
    """One named statement inside a report; ``witness`` is None when it holds."""

    label: str
    witness: tuple | None = None
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.witness is None

    def render(self) -> str:
        status = "ok" if self.holds else "FAIL " + render_value(self.witness)
        extra = f" [{self.note}]" if self.note else ""
        return f"{self.label}: {status}{extra}"


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    instance: str
    verdict: str
    clauses: tuple[Clause, ...] = ()
    precondition: str = ""
    details: tuple[tuple[str, str], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    @property
    def witness(self) -> tuple | None:
        """Label and witness of the first failing clause."""
        for c in self.clauses:
            if not c.holds:
                return (c.label, c.witness)
        return None

    def record(self) -> str:
        """``theorem TAB instance TAB verdict TAB witness`` on one line."""
        if self.verdict == PRECONDITION:
            wit = self.precondition
        elif self.witness is None:
            wit = "-"
        else:
            wit = f"{self.witness[0]}:{render_value(self.witness[1])}"
        return "\t".join((self.theorem, self.instance, self.verdict, wit))

    def render(self) -> str:
        lines = [f"{self.theorem} [{self.instance}]: {self.verdict}"]
        if self.precondition:
            lines.append(f"  precondition: {self.precondition}")
        lines.extend("  " + c.render() for c in self.clauses)
        lines.extend(f"  {k}: {v}" for k, v in self.details)
        return "\n".join(lines)


def from_clauses(theorem: str, instance: str, clauses, details=()) -> TheoremReport:
    clauses = tuple(clauses)
    verdict = PASS if all(c.holds for c in clauses) else FAIL
    return TheoremReport(theorem, instance, verdict, clauses, details=tuple(details))


def precondition_failed(theorem: str, instance: str, reason: str, details=()) -> TheoremReport:
    return TheoremReport(theorem, instance, PRECONDITION, precondition=reason, details=tuple(details))
