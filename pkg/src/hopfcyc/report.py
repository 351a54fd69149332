"""Check reports: an ordered list of named checks with witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable


@dataclass(frozen=True)
class Violation:
    check: str
    witness: tuple = ()
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.check, "witness": list(self.witness), "detail": self.detail}


@dataclass
class Report:
    """Outcome of a verification sweep.  Empty ``violations`` means valid."""

    subject: str = ""
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:  # truthy when something failed, like a list
        return bool(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def record(self, name: str, witness: Any = None, detail: str = "") -> bool:
        """Record a check; ``witness`` None means it passed."""
        passed = witness is None
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed:
            w = witness if isinstance(witness, tuple) else (witness,)
            self.violations.append(Violation(name, w, detail))
        return passed

    def run(self, name: str, fn: Callable[[], Any]) -> bool:
        return self.record(name, fn())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for k, v in other.checks.items():
            key = prefix + k
            self.checks[key] = self.checks.get(key, True) and v
        for v in other.violations:
            self.violations.append(Violation(prefix + v.check, v.witness, v.detail))
        return self

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": dict(self.checks),
            "violations": [v.to_json() for v in self.violations],
        }

    def __repr__(self) -> str:
        if self.ok:
            return f"Report({self.subject!r}: {len(self.checks)} checks passed)"
        return f"Report({self.subject!r}: failed {self.failed()})"


def first_mismatch(a, b, keys) -> Any:
    """First key k with a(k) != b(k), else None."""
    for k in keys:
        if a(k) != b(k):
            return k
    return None
