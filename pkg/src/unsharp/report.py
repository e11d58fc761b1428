"""Axiom-check verdicts with failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence


class StructureError(ValueError):
    """Input tables are malformed or internally inconsistent."""


class ThresholdExceeded(RuntimeError):
    """An exhaustive check was refused because its quantifier domain is too big."""


class TheoremViolation(AssertionError):
    """A constructed structure failed a check that the construction guarantees."""

    def __init__(self, report: "Report"):
        super().__init__(f"theorem violation in {report.name}: {report.summary()}")
        self.report = report


@dataclass(frozen=True)
class Failure:
    tag: str
    witness: dict[str, Any]
    message: str = ""

    def format(self, labels: Sequence[str] | None = None) -> str:
        parts = [f"{k}={_fmt(v, labels)}" for k, v in self.witness.items()]
        text = f"[{self.tag}] " + ", ".join(parts)
        if self.message:
            text += f": {self.message}"
        return text


def _fmt(value, labels):
    if labels is None:
        return repr(value)
    if isinstance(value, (frozenset, set)):
        return "{" + ",".join(labels[i] for i in sorted(value)) + "}"
    if isinstance(value, tuple):
        return "(" + ",".join(_fmt(v, labels) for v in value) + ")"
    if isinstance(value, int) and not isinstance(value, bool) and 0 <= value < len(labels):
        return labels[value]
    return repr(value)


@dataclass
class Report:
    """Outcome of a group of checks.

    Only the first failure per tag is kept, so distinct axiom failures never
    overwrite one another.
    """

    name: str
    failures: dict[str, Failure] = field(default_factory=dict)
    checked: list[str] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def check(self, *tags: str) -> None:
        for tag in tags:
            if tag not in self.checked:
                self.checked.append(tag)

    def fail(self, tag: str, message: str = "", **witness) -> None:
        self.check(tag)
        if tag not in self.failures:
            self.failures[tag] = Failure(tag, witness, message)

    def failed(self, tag: str) -> bool:
        return tag in self.failures

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for tag in other.checked:
            self.check(prefix + tag)
        for tag, f in other.failures.items():
            key = prefix + tag
            if key not in self.failures:
                self.failures[key] = Failure(key, f.witness, f.message)
        for k, v in other.notes.items():
            self.notes.setdefault(prefix + k, v)
        return self

    def summary(self) -> str:
        if self.ok:
            return "pass"
        return "fail: " + ", ".join(self.failures)

    def format(self, labels: Sequence[str] | None = None) -> str:
        lines = [f"{self.name}: {self.summary()}"]
        for f in self.failures.values():
            lines.append("  " + f.format(labels))
        for k, v in self.notes.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)
